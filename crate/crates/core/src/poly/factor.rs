//! Real factorization and the cone test on complex roots.

use num_traits::ToPrimitive;
use thiserror::Error;

use super::{ComplexRoot, IntPoly, RealScalar};

/// Maximum relative coefficient error when re-expanding a factorization.
pub const RECONSTRUCTION_TOLERANCE: f64 = 1e-8;
/// Width of the band around the cone boundary flagged as `boundary`.
pub const BOUNDARY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FactorError {
    #[error("roots account for degree {found}, polynomial has degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("re-expanded factors differ from the polynomial by {error:e} (relative)")]
    Reconstruction { error: f64 },
    #[error("quadratic x^2+{b}x+{c} violates b >= 0, c > 0, b^2 - 4c < 0")]
    QuadraticDomain { b: f64, c: f64 },
}

/// `leading · Π (x - r) · Π (x^2 + b x + c)` with monic factors.
#[derive(Debug, Clone, PartialEq)]
pub struct RealFactorization<F> {
    pub leading: num_bigint::BigInt,
    /// Real roots `r`, one entry per factor `x - r` (repeated by multiplicity).
    pub linear_roots: Vec<F>,
    /// `(b, c)` for each irreducible factor `x^2 + b x + c`.
    pub quadratics: Vec<(F, F)>,
}

impl<F: RealScalar> RealFactorization<F> {
    pub fn degree(&self) -> usize {
        self.linear_roots.len() + 2 * self.quadratics.len()
    }

    /// Coefficients of the expanded product, constant term first.
    pub fn expand(&self) -> Vec<F> {
        let mut acc = vec![F::from(self.leading.to_f64().unwrap_or(f64::NAN)).unwrap()];
        for &r in &self.linear_roots {
            acc = convolve(&acc, &[-r, F::one()]);
        }
        for &(b, c) in &self.quadratics {
            acc = convolve(&acc, &[c, b, F::one()]);
        }
        acc
    }
}

fn convolve<F: RealScalar>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

/// Builds the real factorization from roots returned by
/// [`find_roots`](super::find_roots), checking it against `p`.
pub fn real_factorization<F: RealScalar>(
    p: &IntPoly,
    roots: &[ComplexRoot<F>],
) -> Result<RealFactorization<F>, FactorError> {
    real_factorization_with(p, roots, RECONSTRUCTION_TOLERANCE)
}

pub fn real_factorization_with<F: RealScalar>(
    p: &IntPoly,
    roots: &[ComplexRoot<F>],
    tolerance: f64,
) -> Result<RealFactorization<F>, FactorError> {
    let expected = p.degree().unwrap_or(0);
    let found: usize = roots.iter().map(ComplexRoot::root_count).sum();
    if found != expected {
        return Err(FactorError::DegreeMismatch { expected, found });
    }
    let mut linear_roots = Vec::new();
    let mut quadratics = Vec::new();
    for z in roots {
        for _ in 0..z.multiplicity {
            if z.is_real() {
                linear_roots.push(z.re);
            } else {
                let two = F::one() + F::one();
                quadratics.push((-two * z.re, z.re * z.re + z.im * z.im));
            }
        }
    }
    let fact = RealFactorization {
        leading: p.leading().cloned().unwrap_or_default(),
        linear_roots,
        quadratics,
    };
    let error = reconstruction_error(p, &fact.expand());
    if error.is_nan() || error > tolerance {
        return Err(FactorError::Reconstruction { error });
    }
    Ok(fact)
}

/// Largest coefficient error, relative to the coefficient itself when it is
/// nonzero and to the largest coefficient otherwise.
fn reconstruction_error<F: RealScalar>(p: &IntPoly, expanded: &[F]) -> f64 {
    let exact: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    let scale = exact.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    exact
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let got = expanded.get(k).and_then(|x| x.to_f64()).unwrap_or(0.0);
            let denom = if c != 0.0 { c.abs() } else { scale };
            (got - c).abs() / denom
        })
        .fold(0.0, f64::max)
}

/// Whether the coefficient sequence `(c, b, 1)` of the irreducible quadratic
/// `x^2 + b x + c` (nonnegative coefficients) is log-concave, i.e. `b^2 >= c`.
pub fn quadratic_is_log_concave<F: RealScalar>(b: F, c: F) -> Result<bool, FactorError> {
    let four = F::from_f64(4.0).unwrap();
    if !(b >= F::zero() && c > F::zero() && b * b - four * c < F::zero()) {
        return Err(FactorError::QuadraticDomain {
            b: b.to_f64().unwrap_or(f64::NAN),
            c: c.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(b * b >= c)
}

/// Position of a root relative to the closed cone
/// `Re z <= 0, |Re z| >= |Im z| / √3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeClass {
    Real,
    InCone,
    ConeViolation,
    PositiveRealPart,
}

impl ConeClass {
    pub fn label(self) -> &'static str {
        match self {
            ConeClass::Real => "REAL",
            ConeClass::InCone => "IN_CONE",
            ConeClass::ConeViolation => "CONE_VIOLATION",
            ConeClass::PositiveRealPart => "POSITIVE_REAL_PART",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeVerdict {
    pub class: ConeClass,
    /// `|Re z|` lies within [`BOUNDARY_TOLERANCE`] of `|Im z| / √3`.
    pub boundary: bool,
}

/// Classifies a root against the cone. Roots within `real_threshold`
/// (relative) of the axis are `Real`; roots within [`BOUNDARY_TOLERANCE`] of
/// the boundary count as inside (closed cone) and are flagged.
pub fn cone_classify<F: RealScalar>(re: F, im: F, real_threshold: F) -> ConeVerdict {
    if super::is_real_value(re, im, real_threshold) {
        return ConeVerdict {
            class: ConeClass::Real,
            boundary: false,
        };
    }
    if re > F::zero() {
        return ConeVerdict {
            class: ConeClass::PositiveRealPart,
            boundary: false,
        };
    }
    let radius = im.abs() / F::from_f64(3.0).unwrap().sqrt();
    let gap = re.abs() - radius;
    let band = F::from_f64(BOUNDARY_TOLERANCE).unwrap();
    let boundary = gap.abs() <= band;
    let class = if gap >= F::zero() || boundary {
        ConeClass::InCone
    } else {
        ConeClass::ConeViolation
    };
    ConeVerdict { class, boundary }
}
