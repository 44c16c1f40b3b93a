use thiserror::Error;

use super::exact::{is_real_rooted, real_root_count};
use super::factor::{
    cone_classify, quadratic_is_log_concave, real_factorization_with, ConeClass, ConeVerdict,
    FactorError, RealFactorization, RECONSTRUCTION_TOLERANCE,
};
use super::roots::{find_roots_with, ComplexRoot, RootError, RootOptions};
use super::{IntPoly, RealScalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("cannot analyze the zero polynomial")]
    Zero,
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(
        "Sturm count gives {exact} distinct real roots but {numeric} roots were classified real"
    )]
    RealRootMismatch { exact: usize, numeric: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisOptions {
    pub roots: RootOptions,
    pub reconstruction_tolerance: f64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            roots: RootOptions::default(),
            reconstruction_tolerance: RECONSTRUCTION_TOLERANCE,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedRoot<F> {
    pub root: ComplexRoot<F>,
    pub cone: ConeVerdict,
}

/// Everything the tool reports about one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport<F> {
    pub polynomial: IntPoly,
    pub log_concave: bool,
    pub lc_violation: Option<usize>,
    pub internal_zeros: bool,
    pub real_rooted: bool,
    /// Distinct real roots (Sturm).
    pub real_root_count: usize,
    pub roots: Vec<ClassifiedRoot<F>>,
    pub factorization: RealFactorization<F>,
    pub cone_violations: Vec<ComplexRoot<F>>,
    /// Irreducible quadratic factors `(b, c)` with `b^2 < c`.
    pub non_lc_quadratics: Vec<(F, F)>,
}

impl<F: RealScalar> AnalysisReport<F> {
    pub fn non_real_roots(&self) -> impl Iterator<Item = &ClassifiedRoot<F>> {
        self.roots.iter().filter(|r| !r.root.is_real())
    }

    pub fn has_cone_violation(&self) -> bool {
        !self.cone_violations.is_empty()
    }

    pub fn has_non_lc_quadratic(&self) -> bool {
        !self.non_lc_quadratics.is_empty()
    }
}

pub fn analyze<F: RealScalar>(p: &IntPoly) -> Result<AnalysisReport<F>, AnalysisError> {
    analyze_with(p, &AnalysisOptions::default())
}

/// Exact verdicts (log-concavity, real-rootedness) come from integer
/// arithmetic only; the numeric roots feed the factorization and cone
/// classification and are cross-checked against the Sturm count.
pub fn analyze_with<F: RealScalar>(
    p: &IntPoly,
    opts: &AnalysisOptions,
) -> Result<AnalysisReport<F>, AnalysisError> {
    if p.is_zero() {
        return Err(AnalysisError::Zero);
    }
    let lc_violation = p.log_concavity_violation();
    let real_rooted = is_real_rooted(p);
    let real_count = real_root_count(p);

    let roots: Vec<ComplexRoot<F>> = if p.degree() == Some(0) {
        Vec::new()
    } else {
        find_roots_with(p, &opts.roots)?
    };
    let numeric_real = roots.iter().filter(|r| r.is_real()).count();
    if numeric_real != real_count {
        return Err(AnalysisError::RealRootMismatch {
            exact: real_count,
            numeric: numeric_real,
        });
    }
    let factorization = real_factorization_with(p, &roots, opts.reconstruction_tolerance)?;

    let threshold = F::from_f64(opts.roots.real_threshold).unwrap();
    let classified: Vec<ClassifiedRoot<F>> = roots
        .iter()
        .map(|&root| ClassifiedRoot {
            root,
            cone: cone_classify(root.re, root.im, threshold),
        })
        .collect();
    let cone_violations = classified
        .iter()
        .filter(|r| r.cone.class == ConeClass::ConeViolation)
        .map(|r| r.root)
        .collect();
    let mut non_lc_quadratics: Vec<(F, F)> = factorization
        .quadratics
        .iter()
        .copied()
        .filter(|&(b, c)| quadratic_is_log_concave(b, c) == Ok(false))
        .collect();
    non_lc_quadratics.dedup();

    Ok(AnalysisReport {
        polynomial: p.clone(),
        log_concave: lc_violation.is_none(),
        lc_violation,
        internal_zeros: p.has_internal_zeros(),
        real_rooted,
        real_root_count: real_count,
        roots: classified,
        factorization,
        cone_violations,
        non_lc_quadratics,
    })
}
