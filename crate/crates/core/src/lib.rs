//! Genus distributions of small connected graphs by exhaustive enumeration
//! of rotation systems, and exact analysis of the resulting genus
//! polynomials: log-concavity, real-rootedness, real factorization and the
//! cone condition on complex roots.
//!
//! ```
//! use genus_core::{generalized_petersen, genus_distribution};
//!
//! let g = generalized_petersen(4, 1).unwrap();
//! let dist = genus_distribution(&g).unwrap();
//! assert_eq!(dist.total(), 256);
//! ```

pub mod embedding;
pub mod graph;
pub mod poly;
pub mod survey;

pub use embedding::{
    distribution_partial, genus_distribution, genus_distribution_with, genus_of, trace_faces,
    EmbeddingError, EnumerationOptions, FaceCollection, GenusDistribution,
};
pub use graph::{
    decode_rotation, generalized_petersen, named_graph, parse_graph6, rotation_count, write_graph6,
    Dart, Graph, GraphError, NamedGraph, RotationIndex, RotationSpace, RotationSystem,
};
pub use poly::{
    analyze, find_roots, is_real_rooted, multiply, quadratic_is_log_concave, real_factorization,
    real_root_count, ConeClass, IntPoly, Polynomial, RatPoly, RealScalar,
};
pub use survey::{
    emit_report, run_survey, survey_file, ReportFormat, SurveyError, SurveyOptions, SurveyRecord,
    SurveySummary, SurveyTarget,
};

/// Complex root in double precision.
pub type Root = poly::ComplexRoot<f64>;
/// Real factorization in double precision.
pub type Factorization = poly::RealFactorization<f64>;
/// Analysis report in double precision.
pub type Report = poly::AnalysisReport<f64>;
/// Complex root in single precision.
pub type Root32 = poly::ComplexRoot<f32>;
