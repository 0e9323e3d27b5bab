//! Euler's formula for the depressed quartic.
//!
//! With `t₁, t₂, t₃` the roots of
//! `t³ + (p/2)t² + (p²/16 − r/4)t − q²/64` (the reduction resolvent divided
//! by 64) and square roots chosen so that `√t₁√t₂√t₃ = −q/8`, the roots are
//! the sign patterns `+++`, `+−−`, `−+−`, `−−+` of `±√t₁ ± √t₂ ± √t₃`.

use crate::error::{Error, Result};
use crate::ferrari::cubic_roots;
use crate::numerics::{principal_sqrt, Complex, Tolerance, ONE};
use crate::polynomial::{Polynomial, RootSet};

/// `t³ + (p/2)t² + (p²/16 − r/4)t − q²/64`.
pub fn euler_resolvent(p: Complex, q: Complex, r: Complex) -> Polynomial {
    Polynomial::new(vec![-(q * q) / 64.0, p * p / 16.0 - r / 4.0, p / 2.0, ONE])
        .expect("finite coefficients")
}

/// Roots of [`euler_resolvent`], largest magnitude first.
///
/// The smallest root is recomputed from `t₁t₂t₃ = q²/64`, which keeps it
/// exact when `q = 0` and free of cancellation when `q` is small.
pub fn resolvent_roots(p: Complex, q: Complex, r: Complex) -> [Complex; 3] {
    let mut t = cubic_roots(&euler_resolvent(p, q, r));
    t.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    let pair = t[0] * t[1];
    if pair != Complex::new(0.0, 0.0) {
        t[2] = q * q / 64.0 / pair;
    }
    t
}

/// Square roots `(s₁, s₂, s₃)` with the product constraint applied, and the
/// remaining mismatch `|s₁s₂s₃ + q/8|`.
pub fn euler_square_roots(p: Complex, q: Complex, r: Complex) -> ([Complex; 3], f64) {
    let [t1, t2, t3] = resolvent_roots(p, q, r);
    let s1 = principal_sqrt(t1);
    let (s2, s3) = (principal_sqrt(t2), principal_sqrt(t3));
    let target = -q / 8.0;
    [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)]
        .into_iter()
        .map(|(a, b)| {
            let s = [s1, s2 * a, s3 * b];
            (s, (s[0] * s[1] * s[2] - target).norm())
        })
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("four candidates")
}

pub fn solve_depressed_quartic_euler(p: Complex, q: Complex, r: Complex, tol: &Tolerance) -> Result<RootSet> {
    let poly = Polynomial::new(vec![r, q, p, Complex::new(0.0, 0.0), ONE])?;
    let ([s1, s2, s3], mismatch) = euler_square_roots(p, q, r);
    let scale = poly.root_scale().powi(3);
    if q != Complex::new(0.0, 0.0) && !tol.is_negligible(mismatch, scale) {
        return Err(Error::SignSelection { mismatch });
    }
    let roots = vec![
        s1 + s2 + s3,
        s1 - s2 - s3,
        -s1 + s2 - s3,
        -s1 - s2 + s3,
    ];
    Ok(RootSet::measured(roots, &poly))
}
