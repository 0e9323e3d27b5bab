//! Dense complex polynomials and root multisets.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numerics::{ensure_finite, Complex, ONE, ZERO};

/// Dense polynomial over [`Complex`], coefficients stored constant term first.
///
/// Trailing zero coefficients are trimmed on construction, so the degree is
/// always that of the highest nonzero coefficient. The zero polynomial is
/// stored as `[0]` and reports degree 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        for &c in &coeffs {
            ensure_finite(c, "polynomial coefficient")?;
        }
        Ok(Self::trimmed(coeffs))
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    /// `∏ (x − rⱼ)`.
    pub fn from_roots(roots: &[Complex]) -> Self {
        roots.iter().fold(Self::constant(ONE), |acc, &r| {
            acc * Self::trimmed(vec![-r, ONE])
        })
    }

    pub fn constant(c: Complex) -> Self {
        Self::trimmed(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::trimmed(vec![ZERO, ONE])
    }

    fn trimmed(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&ZERO) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex {
        *self.coeffs.last().expect("never empty")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    /// Coefficient of `xᵏ` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Normalization);
        }
        let lead = self.leading();
        let mut coeffs: Vec<Complex> = self.coeffs.iter().map(|&c| c / lead).collect();
        *coeffs.last_mut().expect("never empty") = ONE;
        Ok(Self { coeffs })
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Complex) -> Complex {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * x + c)
    }

    /// `Σ |cₖ| |x|ᵏ`, the magnitude against which a residual at `x` is judged.
    pub fn eval_magnitude(&self, x: Complex) -> f64 {
        let r = x.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Upper estimate of root magnitudes, at least 1:
    /// `max(1, maxₖ |cₖ/cₙ|^{1/(n−k)})`.
    pub fn root_scale(&self) -> f64 {
        let n = self.degree();
        let lead = self.leading().norm();
        (0..n)
            .map(|k| (self.coeffs[k].norm() / lead).powf(1.0 / (n - k) as f64))
            .fold(1.0, f64::max)
    }

    /// Residual scale `|cₙ| · max(1, maxₖ<ₙ |cₖ/cₙ|)^{n/2}`.
    ///
    /// For the depressed cubic this is `max(1, |3p|, |q|)^{3/2}`; for the
    /// depressed quartic `max(1, |p|, |q|, |r|)²`.
    pub fn residual_scale(&self) -> f64 {
        let n = self.degree();
        let lead = self.leading().norm();
        let m = self.coeffs[..n]
            .iter()
            .map(|c| c.norm() / lead)
            .fold(1.0, f64::max);
        lead * m.powf(n as f64 / 2.0)
    }

    pub fn scale(&self, factor: Complex) -> Self {
        Self::trimmed(self.coeffs.iter().map(|&c| c * factor).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::constant(ONE), |acc, _| acc * self.clone())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::trimmed((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::trimmed(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        let mut out = vec![ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::trimmed(out)
    }
}

/// Unordered multiset of roots, each carrying its residual `|P(x)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<Complex>,
    residuals: Vec<f64>,
}

impl RootSet {
    /// Records `|poly(x)|` for each root.
    pub fn measured(roots: Vec<Complex>, poly: &Polynomial) -> Self {
        let residuals = roots.iter().map(|&x| poly.eval(x).norm()).collect();
        Self { roots, residuals }
    }

    pub fn roots(&self) -> &[Complex] {
        &self.roots
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn sum(&self) -> Complex {
        self.roots.iter().sum()
    }

    /// Re-measures residuals against another polynomial.
    pub fn remeasured(self, poly: &Polynomial) -> Self {
        Self::measured(self.roots, poly)
    }

    /// Undoes a depression `x → y − shift`: every root becomes `y − shift`.
    ///
    /// Residuals are carried over unchanged, which is exact for the monic
    /// polynomial the depressed form came from.
    pub fn shifted(self, shift: Complex) -> Self {
        Self {
            roots: self.roots.into_iter().map(|y| y - shift).collect(),
            residuals: self.residuals,
        }
    }

    pub fn into_roots(self) -> Vec<Complex> {
        self.roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::from_real(&[1.0, 2.0, 3.0, 0.0]).unwrap();
        assert_eq!(p.degree(), 2);
        let z = Polynomial::from_real(&[0.0, 0.0]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 0);
        assert_eq!(z.monic(), Err(Error::Normalization));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(Polynomial::from_real(&[1.0, f64::INFINITY]).is_err());
        assert!(Polynomial::new(vec![Complex::new(0.0, f64::NAN)]).is_err());
    }

    #[test]
    fn from_roots_expands() {
        // x(x − 1)(x − 2)(x + 3) = x⁴ − 7x² + 6x
        let p = Polynomial::from_roots(&[c(0.0), c(1.0), c(2.0), c(-3.0)]);
        assert_eq!(p.coeffs(), &[c(0.0), c(6.0), c(-7.0), c(0.0), c(1.0)]);
        assert_eq!(p.eval(c(2.0)), c(0.0));
        assert_eq!(p.eval(c(3.0)), c(81.0 - 63.0 + 18.0));
    }

    #[test]
    fn arithmetic() {
        let x = Polynomial::x();
        let one = Polynomial::constant(ONE);
        let sq = (x.clone() + one.clone()).pow(2);
        assert_eq!(sq.coeffs(), &[c(1.0), c(2.0), c(1.0)]);
        assert!((sq.clone() - sq).is_zero());
    }

    #[test]
    fn scales() {
        let p = Polynomial::from_real(&[4.0, -6.0, 0.0, 1.0]).unwrap();
        assert!((p.residual_scale() - 6f64.powf(1.5)).abs() < 1e-12);
        assert!((p.root_scale() - 6f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn shift_roots() {
        let p = Polynomial::from_real(&[0.0, 0.0, 0.0, 1.0]).unwrap();
        let set = RootSet::measured(vec![c(0.0); 3], &p).shifted(c(1.0));
        assert_eq!(set.roots(), &[c(-1.0); 3]);

        let set = RootSet::measured(vec![c(1.0), c(1.0), c(-2.0)], &p);
        assert_eq!(set.clone().shifted(ZERO), set);
        assert_eq!(set.shifted(c(1.0)).roots(), &[c(0.0), c(0.0), c(-3.0)]);
    }
}
