//! Simultaneous root finding (Aberth–Ehrlich).

use num_complex::Complex;
use thiserror::Error;

use super::exact::square_free_decomposition;
use super::{IntPoly, RealScalar};

/// Default bound on the relative residual of an accepted root.
pub const DEFAULT_ROOT_TOLERANCE: f64 = 1e-12;
/// Sweep cap for the iteration.
pub const MAX_SWEEPS: usize = 1000;
/// A root is real when `|im| <= REAL_THRESHOLD * max(1, |z|)`.
pub const REAL_THRESHOLD: f64 = 1e-9;
/// Angular offset of the initial guesses on the Cauchy circle (radians).
const START_ANGLE: f64 = 0.4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("cannot locate roots of a constant or zero polynomial")]
    Degenerate,
    #[error("no convergence after {sweeps} sweeps; worst relative residual {worst:e}")]
    NoConvergence {
        sweeps: usize,
        worst: f64,
        residuals: Vec<f64>,
    },
    #[error("non-real roots do not pair into conjugates ({upper} above the axis, {lower} below)")]
    Unpaired { upper: usize, lower: usize },
}

/// One root, or one conjugate pair `re ± im·i` when `im > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexRoot<F> {
    pub re: F,
    /// Zero for real roots, positive for a stored conjugate pair.
    pub im: F,
    pub multiplicity: usize,
    /// `|q(z)| / Σ|q_i||z|^i` for the square-free factor `q` it was found in.
    pub residual: F,
}

impl<F: RealScalar> ComplexRoot<F> {
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Roots this entry stands for, counting conjugates and multiplicity.
    pub fn root_count(&self) -> usize {
        self.multiplicity * if self.is_real() { 1 } else { 2 }
    }

    pub fn modulus(&self) -> F {
        self.re.hypot(self.im)
    }

    pub fn as_complex(&self) -> Complex<F> {
        Complex::new(self.re, self.im)
    }

    /// `|Im z| / √3`, the cone radius at this height.
    pub fn im_over_sqrt3(&self) -> F {
        self.im.abs() / F::from_f64(3.0).unwrap().sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    /// Bound on the relative residual.
    pub tolerance: f64,
    pub max_sweeps: usize,
    /// Relative threshold below which `|im|` counts as zero.
    pub real_threshold: f64,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            tolerance: DEFAULT_ROOT_TOLERANCE,
            max_sweeps: MAX_SWEEPS,
            real_threshold: REAL_THRESHOLD,
        }
    }
}

/// `|im| <= threshold * max(1, |z|)`.
pub fn is_real_value<F: RealScalar>(re: F, im: F, threshold: F) -> bool {
    im.abs() <= threshold * F::one().max(re.hypot(im))
}

fn eval_with_derivative<F: RealScalar>(coeffs: &[F], z: Complex<F>) -> (Complex<F>, Complex<F>) {
    let mut p = Complex::new(F::zero(), F::zero());
    let mut dp = p;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + Complex::new(c, F::zero());
    }
    (p, dp)
}

fn relative_residual<F: RealScalar>(coeffs: &[F], z: Complex<F>) -> F {
    let (p, _) = eval_with_derivative(coeffs, z);
    let r = z.norm();
    let scale = coeffs
        .iter()
        .rev()
        .fold(F::zero(), |acc, &c| acc * r + c.abs());
    if scale.is_zero() {
        p.norm()
    } else {
        p.norm() / scale
    }
}

/// Runs Aberth–Ehrlich on `coeffs` (constant term first, nonzero leading
/// coefficient). Initial guesses are equally spaced on the Cauchy-bound
/// circle, rotated by 0.4 rad. Returns all roots and their relative residuals,
/// or an error when some residual stays above `tolerance` after the cap.
pub fn aberth<F: RealScalar>(
    coeffs: &[F],
    tolerance: F,
    max_sweeps: usize,
) -> Result<Vec<(Complex<F>, F)>, RootError> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Err(RootError::Degenerate);
    }
    let lead = coeffs[n];
    let bound = F::one()
        + coeffs[..n]
            .iter()
            .map(|c| (*c / lead).abs())
            .fold(F::zero(), F::max);
    let tau = F::from_f64(std::f64::consts::TAU).unwrap();
    let offset = F::from_f64(START_ANGLE).unwrap();
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let angle = tau * F::from_usize(k).unwrap() / F::from_usize(n).unwrap() + offset;
            Complex::from_polar(bound, angle)
        })
        .collect();

    let tiny = F::epsilon() * F::from_f64(8.0).unwrap();
    let mut sweeps = 0;
    while sweeps < max_sweeps {
        sweeps += 1;
        let mut settled = true;
        for k in 0..n {
            let (p, dp) = eval_with_derivative(coeffs, z[k]);
            if p.norm().is_zero() {
                continue;
            }
            let repulsion = (0..n)
                .filter(|&j| j != k)
                .fold(Complex::new(F::zero(), F::zero()), |acc, j| {
                    acc + (z[k] - z[j]).inv()
                });
            let denom = dp - p * repulsion;
            if denom.norm().is_zero() {
                settled = false;
                continue;
            }
            let step = p / denom;
            if step.norm() > tiny * z[k].norm().max(F::min_positive_value()) {
                settled = false;
            }
            z[k] = z[k] - step;
        }
        if settled {
            break;
        }
    }
    let residuals: Vec<F> = z.iter().map(|&r| relative_residual(coeffs, r)).collect();
    let worst = residuals.iter().copied().fold(F::zero(), F::max);
    if worst.is_nan() || worst > tolerance {
        return Err(RootError::NoConvergence {
            sweeps,
            worst: worst.to_f64().unwrap_or(f64::NAN),
            residuals: residuals
                .iter()
                .map(|r| r.to_f64().unwrap_or(f64::NAN))
                .collect(),
        });
    }
    Ok(z.into_iter().zip(residuals).collect())
}

/// All roots of `p` with default options.
pub fn find_roots<F: RealScalar>(p: &IntPoly, tol: F) -> Result<Vec<ComplexRoot<F>>, RootError> {
    find_roots_with(
        p,
        &RootOptions {
            tolerance: tol.to_f64().unwrap_or(DEFAULT_ROOT_TOLERANCE),
            ..RootOptions::default()
        },
    )
}

/// All roots of `p`: each square-free factor from Yun's decomposition is
/// solved separately and its roots carry that factor's multiplicity.
/// Conjugate pairs are stored once (positive imaginary part). Output is
/// sorted: real roots ascending, then pairs by ascending real part.
pub fn find_roots_with<F: RealScalar>(
    p: &IntPoly,
    opts: &RootOptions,
) -> Result<Vec<ComplexRoot<F>>, RootError> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(RootError::Degenerate);
    }
    let tol = F::from_f64(opts.tolerance).unwrap();
    let threshold = F::from_f64(opts.real_threshold).unwrap();
    let mut out = Vec::new();
    for (factor, multiplicity) in square_free_decomposition(p) {
        let coeffs: Vec<F> = factor.to_float::<F>().into_coeffs();
        let roots = if coeffs.len() == 2 {
            let z = Complex::new(-coeffs[0] / coeffs[1], F::zero());
            vec![(z, relative_residual(&coeffs, z))]
        } else {
            aberth(&coeffs, tol, opts.max_sweeps)?
        };
        let (mut upper, mut lower) = (0, 0);
        for (z, residual) in roots {
            if is_real_value(z.re, z.im, threshold) {
                out.push(ComplexRoot {
                    re: z.re,
                    im: F::zero(),
                    multiplicity,
                    residual,
                });
            } else if z.im > F::zero() {
                upper += 1;
                out.push(ComplexRoot {
                    re: z.re,
                    im: z.im,
                    multiplicity,
                    residual,
                });
            } else {
                lower += 1;
            }
        }
        if upper != lower {
            return Err(RootError::Unpaired { upper, lower });
        }
    }
    out.sort_by(|a, b| {
        (!a.is_real())
            .cmp(&!b.is_real())
            .then(a.re.partial_cmp(&b.re).unwrap_or(std::cmp::Ordering::Equal))
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    Ok(out)
}
