//! Face tracing and exhaustive genus distributions.

mod distribution;
mod faces;

pub use distribution::{
    distribution_partial, genus_distribution, genus_distribution_with, EnumerationOptions,
    GenusDistribution, DEFAULT_BUDGET,
};
pub use faces::{euler_genus, genus_of, trace_faces, FaceCollection};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("enumeration needs {required} rotation systems, over the budget of {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("rotation space of {required} systems does not fit a 64-bit index")]
    IndexSpaceTooLarge { required: String },
    #[error("rotation range [{lo}, {hi}) outside [0, {count})")]
    RangeOutOfBounds { lo: u64, hi: u64, count: u64 },
    #[error("Euler relation violated: V={vertices}, E={edges}, F={faces}")]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error("genus count overflowed 64 bits")]
    CountOverflow,
}
