//! Depressed normal forms of monic cubics and quartics.
//!
//! A cubic `x³ + ax² + bx + c` becomes `y³ + 3py + q` under `x = y − a/3`,
//! and a quartic `x⁴ + ax³ + …` becomes `y⁴ + py² + qy + r` under
//! `x = y − a/4`. Note the factor 3 in the cubic normalization.

use crate::error::{Error, Result};
use crate::numerics::{Complex, ONE, ZERO};
use crate::polynomial::{Polynomial, RootSet};

/// `y³ + 3p·y + q`, obtained by substituting `x = y − shift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedCubic {
    pub p: Complex,
    pub q: Complex,
    pub shift: Complex,
}

impl DepressedCubic {
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(vec![self.q, self.p * 3.0, ZERO, ONE]).expect("finite coefficients")
    }
}

/// `y⁴ + p·y² + q·y + r`, obtained by substituting `x = y − shift`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedQuartic {
    pub p: Complex,
    pub q: Complex,
    pub r: Complex,
    pub shift: Complex,
}

impl DepressedQuartic {
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(vec![self.r, self.q, self.p, ZERO, ONE]).expect("finite coefficients")
    }
}

fn monic_of_degree(poly: &Polynomial, degree: usize) -> Result<Polynomial> {
    if poly.is_zero() {
        return Err(Error::Normalization);
    }
    if poly.degree() != degree {
        return Err(Error::Degree {
            expected: degree,
            found: poly.degree(),
        });
    }
    poly.monic()
}

pub fn depress_cubic(poly: &Polynomial) -> Result<DepressedCubic> {
    let m = monic_of_degree(poly, 3)?;
    let (c, b, a) = (m.coeff(0), m.coeff(1), m.coeff(2));
    Ok(DepressedCubic {
        p: b / 3.0 - a * a / 9.0,
        q: c - a * b / 3.0 + a * a * a * (2.0 / 27.0),
        shift: a / 3.0,
    })
}

pub fn depress_quartic(poly: &Polynomial) -> Result<DepressedQuartic> {
    let m = monic_of_degree(poly, 4)?;
    let shift = m.coeff(3) / 4.0;
    let d = taylor_shift(m.coeffs(), -shift);
    Ok(DepressedQuartic {
        p: d[2],
        q: d[1],
        r: d[0],
        shift,
    })
}

/// Coefficients of `P(y + h)` by binomial expansion:
/// `dⱼ = Σ_{k≥j} cₖ · C(k, j) · h^{k−j}`.
pub fn taylor_shift(coeffs: &[Complex], h: Complex) -> Vec<Complex> {
    let n = coeffs.len();
    let mut out = vec![ZERO; n];
    for (k, &ck) in coeffs.iter().enumerate() {
        let mut binom = 1.0;
        let mut h_pow = ONE;
        // j runs downward from k, so h^{k−j} grows while C(k, j) is updated
        // multiplicatively.
        for j in (0..=k).rev() {
            out[j] += ck * binom * h_pow;
            binom = binom * j as f64 / (k - j + 1) as f64;
            h_pow *= h;
        }
    }
    out
}

/// `x = y − shift` for every root.
pub fn shift_roots(roots: RootSet, shift: Complex) -> RootSet {
    roots.shifted(shift)
}
