//! Linear and monic quadratic equations.

use crate::error::{Error, Result};
use crate::numerics::{principal_sqrt, Complex, ONE, ZERO};
use crate::polynomial::{Polynomial, RootSet};

/// Root of `a·x + b = 0`.
pub fn solve_linear(a: Complex, b: Complex) -> Result<RootSet> {
    if a == ZERO {
        return Err(Error::DegenerateDegree);
    }
    let poly = Polynomial::new(vec![b, a])?;
    Ok(RootSet::measured(vec![-b / a], &poly))
}

/// Both roots of `t² + b·t + c`, larger magnitude first.
///
/// The larger root takes the sign of the square root that avoids
/// cancellation against `−b`; the smaller one is recovered as `c / t₁`.
pub fn quadratic_roots(b: Complex, c: Complex) -> [Complex; 2] {
    let sq = principal_sqrt(b * b - c * 4.0);
    // pick the sign aligned with −b; on a tie take −b + √Δ
    let big = if (b.conj() * sq).re > 0.0 {
        (-b - sq) / 2.0
    } else {
        (-b + sq) / 2.0
    };
    if big == ZERO {
        return [ZERO, ZERO];
    }
    [big, c / big]
}

pub fn solve_quadratic(b: Complex, c: Complex) -> RootSet {
    let poly = Polynomial::new(vec![c, b, ONE]).expect("finite coefficients");
    RootSet::measured(quadratic_roots(b, c).to_vec(), &poly)
}
