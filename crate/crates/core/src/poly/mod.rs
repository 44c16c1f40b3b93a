//! Univariate polynomials and genus-polynomial analysis.
//!
//! [`Polynomial`] is generic over its coefficient ring. Decisions that must be
//! exact (log-concavity, Sturm counts, square-free decomposition) run over
//! `BigInt`/`BigRational`; root location and real factorization run over any
//! [`RealScalar`] (`f32`, `f64`).

mod analyze;
mod exact;
mod factor;
mod roots;

pub use analyze::{
    analyze, analyze_with, AnalysisError, AnalysisOptions, AnalysisReport, ClassifiedRoot,
};
pub use exact::{
    is_real_rooted, real_root_count, square_free_decomposition, square_free_part, sturm_sequence,
};
pub use factor::{
    cone_classify, quadratic_is_log_concave, real_factorization, real_factorization_with,
    ConeClass, ConeVerdict, FactorError, RealFactorization, BOUNDARY_TOLERANCE,
    RECONSTRUCTION_TOLERANCE,
};
pub use roots::{
    aberth, find_roots, find_roots_with, is_real_value, ComplexRoot, RootError, RootOptions,
    DEFAULT_ROOT_TOLERANCE, MAX_SWEEPS, REAL_THRESHOLD,
};

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, One, ToPrimitive, Zero};

/// Floating-point scalars usable for root finding.
pub trait RealScalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl<T> RealScalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// Dense polynomial, constant term first. Trailing zero coefficients are
/// trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Zero> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T
    where
        T: Clone,
    {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// True iff some zero coefficient lies strictly between two nonzero ones.
    pub fn has_internal_zeros(&self) -> bool {
        let first = self.coeffs.iter().position(|c| !c.is_zero());
        match first {
            Some(lo) => self.coeffs[lo..].iter().any(Zero::is_zero),
            None => false,
        }
    }

    pub fn map<U: Zero>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T> Polynomial<T>
where
    T: Clone + Zero + Mul<Output = T> + PartialOrd,
{
    /// Smallest `k` with `a_k^2 < a_{k-1} a_{k+1}`, if any.
    pub fn log_concavity_violation(&self) -> Option<usize> {
        (1..self.coeffs.len().saturating_sub(1)).find(|&k| {
            let c = &self.coeffs;
            c[k].clone() * c[k].clone() < c[k - 1].clone() * c[k + 1].clone()
        })
    }

    pub fn is_log_concave(&self) -> bool {
        self.log_concavity_violation().is_none()
    }
}

impl<T> Polynomial<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<T> Mul for &Polynomial<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T> Mul for Polynomial<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        &self * &rhs
    }
}

impl<T: Zero + One + Clone> One for Polynomial<T>
where
    T: Add<Output = T> + Mul<Output = T>,
{
    fn one() -> Self {
        Polynomial::new(vec![T::one()])
    }
}

/// Exact coefficient convolution.
pub fn multiply<T>(a: &Polynomial<T>, b: &Polynomial<T>) -> Polynomial<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    a * b
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Lossy conversion of the coefficients to a floating-point type.
    pub fn to_float<F: RealScalar>(&self) -> Polynomial<F> {
        self.map(|c| F::from_f64(c.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan))
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolynomialError(pub String);

impl fmt::Display for ParsePolynomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid coefficient list: {}", self.0)
    }
}

impl std::error::Error for ParsePolynomialError {}

/// Parses a comma-separated coefficient list, constant term first.
impl FromStr for IntPoly {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| ParsePolynomialError(format!("{t:?} is not an integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

/// Descending powers without spaces, e.g. `39840x^4+23536x^3+2074x^2+84x+2`.
impl<T> fmt::Display for Polynomial<T>
where
    T: fmt::Display + Zero + One + PartialEq,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let unit = magnitude == "1";
            match k {
                0 => f.write_str(&magnitude)?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{magnitude}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{magnitude}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Integer-coefficient polynomial.
pub type IntPoly = Polynomial<BigInt>;
/// Rational-coefficient polynomial.
pub type RatPoly = Polynomial<BigRational>;
