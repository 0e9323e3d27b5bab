//! The depressed cubic `x³ + 3px + q = 0` via its circulant coefficients.
//!
//! With roots `x₁, x₂, x₃` on the diagonal of `A`, `W†AW = αΣ₁ + βΣ₁²`.
//! Substituting into `A³ + 3pA + q = 0` and reading off the coefficients of
//! `1, Σ₁, Σ₁²` forces
//!
//! ```text
//! α³ + β³ = −q,    αβ = −p,
//! ```
//!
//! so `α³` and `β³` are the two roots of `t² + qt − p³ = 0`, and the roots
//! come back as `x₁ = α + β`, `x₂ = σ²α + σβ`, `x₃ = σα + σ²β`.

use crate::numerics::{principal_nth_root, unity_root, Complex, ZERO};
use crate::polynomial::{Polynomial, RootSet};
use crate::quadratic::quadratic_roots;

/// Circulant amplitudes `(α, β)` of a depressed cubic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoeffs {
    pub alpha: Complex,
    pub beta: Complex,
}

impl CubicCoeffs {
    /// `(0, α, β)`: the coefficients of `1, Σ₁, Σ₁²`.
    pub fn circulant(&self) -> [Complex; 3] {
        [ZERO, self.alpha, self.beta]
    }

    /// `x₁ = α + β`, `x₂ = σ²α + σβ`, `x₃ = σα + σ²β`.
    pub fn roots(&self) -> [Complex; 3] {
        let s = unity_root(3, 1);
        let s2 = unity_root(3, 2);
        let (a, b) = (self.alpha, self.beta);
        [a + b, s2 * a + s * b, s * a + s2 * b]
    }

    /// Residuals of `α³ + β³ + q` and `αβ + p`.
    pub fn coupling_residuals(&self, p: Complex, q: Complex) -> (f64, f64) {
        let (a, b) = (self.alpha, self.beta);
        ((a * a * a + b * b * b + q).norm(), (a * b + p).norm())
    }
}

/// Solves the resolvent `t² + qt − p³ = 0`, takes `α` as the principal cube
/// root of the larger-magnitude root and couples `β = −p/α`.
///
/// When `α = 0` both resolvent roots vanish and so does `β`.
pub fn cardano_coeffs(p: Complex, q: Complex) -> CubicCoeffs {
    let [big, small] = quadratic_roots(q, -(p * p * p));
    let alpha = principal_nth_root(big, 3);
    let beta = if alpha != ZERO {
        -p / alpha
    } else {
        principal_nth_root(small, 3)
    };
    CubicCoeffs { alpha, beta }
}

pub fn solve_depressed_cubic(p: Complex, q: Complex) -> RootSet {
    let poly = depressed_cubic_polynomial(p, q);
    RootSet::measured(cardano_coeffs(p, q).roots().to_vec(), &poly)
}

pub(crate) fn depressed_cubic_polynomial(p: Complex, q: Complex) -> Polynomial {
    Polynomial::new(vec![q, p * 3.0, ZERO, Complex::new(1.0, 0.0)]).expect("finite coefficients")
}

/// Roots of a monic cubic `x³ + a x² + b x + c` through its depressed form.
pub fn solve_monic_cubic(a: Complex, b: Complex, c: Complex) -> [Complex; 3] {
    let p = b / 3.0 - a * a / 9.0;
    let q = c - a * b / 3.0 + a * a * a * (2.0 / 27.0);
    let shift = a / 3.0;
    cardano_coeffs(p, q).roots().map(|y| y - shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ONE;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn same_multiset(a: &[Complex], b: &[Complex], eps: f64) -> bool {
        let mut used = vec![false; b.len()];
        a.iter().all(|x| {
            let hit = b
                .iter()
                .enumerate()
                .filter(|(j, _)| !used[*j])
                .min_by(|(_, u), (_, v)| (*u - x).norm().total_cmp(&(*v - x).norm()));
            match hit {
                Some((j, y)) if (y - x).norm() <= eps => {
                    used[j] = true;
                    true
                }
                _ => false,
            }
        })
    }

    #[test]
    fn coeffs_examples() {
        let k = cardano_coeffs(ZERO, -ONE);
        assert_eq!((k.alpha, k.beta), (ONE, ZERO));

        let k = cardano_coeffs(ZERO, ZERO);
        assert_eq!((k.alpha, k.beta), (ZERO, ZERO));

        // resolvent t² + 4t + 8 → −2 ± 2i, α = cbrt(−2 + 2i) = 1 + i
        let k = cardano_coeffs(c(-2., 0.), c(4., 0.));
        assert!((k.alpha - c(1., 1.)).norm() < 1e-14);
        assert!((k.beta - c(2., 0.) / k.alpha).norm() < 1e-15);
        let (cube, prod) = k.coupling_residuals(c(-2., 0.), c(4., 0.));
        assert!(cube < 1e-13 && prod < 1e-14);
    }

    #[test]
    fn solve_examples() {
        let s = unity_root(3, 1);
        let r = solve_depressed_cubic(ZERO, -ONE);
        assert!(same_multiset(r.roots(), &[ONE, s, s * s], 1e-15));

        // x³ − 6x + 4 = (x − 2)(x² + 2x − 2)
        let r3 = 3f64.sqrt();
        let r = solve_depressed_cubic(c(-2., 0.), c(4., 0.));
        assert!(same_multiset(
            r.roots(),
            &[c(2., 0.), c(-1. + r3, 0.), c(-1. - r3, 0.)],
            1e-14
        ));
        assert!(r.max_residual() < 1e-13);

        assert_eq!(solve_depressed_cubic(ZERO, ZERO).roots(), &[ZERO; 3]);
    }

    #[test]
    fn alternative_branch_permutes_roots() {
        let (p, q) = (c(1.5, -2.), c(-3., 0.25));
        let k = cardano_coeffs(p, q);
        let s = unity_root(3, 1);
        let rotated = CubicCoeffs {
            alpha: k.alpha * s,
            beta: k.beta * s * s,
        };
        assert!(same_multiset(&k.roots(), &rotated.roots(), 1e-12));
        let (cube, prod) = rotated.coupling_residuals(p, q);
        assert!(cube < 1e-12 && prod < 1e-12);
    }

    #[test]
    fn monic_cubic_shifts_back() {
        // x³ + 3x² = x²(x + 3)
        let roots = solve_monic_cubic(c(3., 0.), ZERO, ZERO);
        assert!(same_multiset(&roots, &[ZERO, ZERO, c(-3., 0.)], 1e-7));
    }
}
