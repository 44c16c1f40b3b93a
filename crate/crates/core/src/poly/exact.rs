//! Exact algorithms: square-free decomposition (Yun) and Sturm root counting.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, Polynomial, RatPoly};

fn rat_derivative(p: &RatPoly) -> RatPoly {
    Polynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn int_derivative(p: &IntPoly) -> IntPoly {
    Polynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

fn monic(p: &RatPoly) -> RatPoly {
    match p.leading() {
        Some(lc) => p.map(|c| c / lc),
        None => p.clone(),
    }
}

/// Quotient and remainder over Q.
fn rat_div_rem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let db = b.degree().expect("division by the zero polynomial");
    let lc = b.leading().unwrap();
    let mut rem: Vec<BigRational> = a.coeffs().to_vec();
    let Some(da) = a.degree().filter(|&da| da >= db) else {
        return (Polynomial::zero(), a.clone());
    };
    let mut quot = vec![BigRational::zero(); da - db + 1];
    for k in (db..=da).rev() {
        let factor = &rem[k] / lc;
        if factor.is_zero() {
            continue;
        }
        for (i, c) in b.coeffs().iter().enumerate() {
            rem[k - db + i] = &rem[k - db + i] - &factor * c;
        }
        quot[k - db] = factor;
    }
    rem.truncate(db);
    (Polynomial::new(quot), Polynomial::new(rem))
}

fn rat_exact_div(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (q, r) = rat_div_rem(a, b);
    debug_assert!(r.is_zero(), "inexact polynomial division");
    q
}

/// Monic gcd over Q.
fn rat_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = rat_div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// Scales a rational polynomial to a primitive integer polynomial with a
/// positive leading coefficient.
fn primitive_integer(p: &RatPoly) -> IntPoly {
    let denominators = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(denominators.clone())).to_integer())
        .collect();
    primitive_part(&Polynomial::new(ints))
}

/// Divides out the content and makes the leading coefficient positive.
fn primitive_part(p: &IntPoly) -> IntPoly {
    let content = p.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return p.clone();
    }
    let signed = if p.leading().is_some_and(|lc| lc.is_negative()) {
        -content
    } else {
        content
    };
    p.map(|c| c / &signed)
}

/// Square-free decomposition `p = lc · Π q_i^i` by Yun's algorithm over Q.
/// Returns the non-constant factors as primitive integer polynomials with
/// positive leading coefficients, paired with their multiplicity.
pub fn square_free_decomposition(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    let f = monic(&p.to_rational());
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let df = rat_derivative(&f);
    let a0 = rat_gcd(&f, &df);
    let mut b = rat_exact_div(&f, &a0);
    let c = rat_exact_div(&df, &a0);
    let mut d = sub(&c, &rat_derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = rat_gcd(&b, &d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((primitive_integer(&a), i));
        }
        b = rat_exact_div(&b, &a);
        let c = rat_exact_div(&d, &a);
        d = sub(&c, &rat_derivative(&b));
        i += 1;
    }
    out
}

fn sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    Polynomial::new((0..n).map(|k| a.coeff(k) - b.coeff(k)).collect())
}

/// `p / gcd(p, p')` as a primitive integer polynomial.
pub fn square_free_part(p: &IntPoly) -> IntPoly {
    let f = p.to_rational();
    if f.degree().unwrap_or(0) == 0 {
        return primitive_part(p);
    }
    let g = rat_gcd(&f, &rat_derivative(&f));
    primitive_integer(&rat_exact_div(&f, &g))
}

/// Pseudo-remainder scaled by a positive factor: `|lc(b)|^(m-n+1) a mod b`
/// up to positive content, so its sign agrees with the true remainder.
fn signed_prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("nonzero divisor");
    let lc = b.leading().unwrap().clone();
    let Some(da) = a.degree().filter(|&da| da >= db) else {
        return a.clone();
    };
    let steps = da - db + 1;
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    for _ in 0..steps {
        let deg = r.iter().rposition(|c| !c.is_zero());
        match deg {
            Some(k) if k >= db => {
                let lead = r[k].clone();
                for c in r.iter_mut() {
                    *c *= &lc;
                }
                for (i, bc) in b.coeffs().iter().enumerate() {
                    r[k - db + i] -= &lead * bc;
                }
            }
            _ => {
                for c in r.iter_mut() {
                    *c *= &lc;
                }
            }
        }
    }
    let mut r = Polynomial::new(r);
    if lc.is_negative() && steps % 2 == 1 {
        r = r.map(|c| -c);
    }
    // Strip positive content only.
    let content = r.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        r
    } else {
        r.map(|c| c / &content)
    }
}

/// Sturm chain `p, p', -rem(p, p'), …` of the square-free part of `p`, with
/// positive content stripped at each step.
pub fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let p0 = square_free_part(p);
    if p0.is_zero() {
        return Vec::new();
    }
    let mut chain = vec![p0.clone()];
    let p1 = int_derivative(&p0);
    if p1.is_zero() {
        return chain;
    }
    chain.push(p1);
    loop {
        let n = chain.len();
        let r = signed_prem(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.map(|c| -c));
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::NoSign;
    let mut changes = 0;
    for s in signs.filter(|&s| s != Sign::NoSign) {
        if last != Sign::NoSign && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots, by Sturm's theorem on `(-∞, ∞)`.
pub fn real_root_count(p: &IntPoly) -> usize {
    let chain = sturm_sequence(p);
    let at_pos = chain.iter().map(|q| q.leading().unwrap().sign());
    let at_neg = chain.iter().map(|q| {
        let s = q.leading().unwrap().sign();
        if q.degree().unwrap() % 2 == 1 {
            -s
        } else {
            s
        }
    });
    sign_changes(at_neg) - sign_changes(at_pos)
}

/// True iff all roots of `p` are real: each square-free factor `q_i` has
/// `deg q_i` distinct real roots. Nonzero constants are vacuously real-rooted.
pub fn is_real_rooted(p: &IntPoly) -> bool {
    assert!(!p.is_zero(), "real-rootedness of the zero polynomial");
    square_free_decomposition(p)
        .iter()
        .all(|(q, _)| real_root_count(q) == q.degree().unwrap())
}
