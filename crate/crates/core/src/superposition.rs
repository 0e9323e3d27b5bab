//! The matrix picture behind the closed-form solvers.
//!
//! For roots `x₀ … xₙ₋₁` stored on the diagonal of `A`, the conjugate
//! `W†AW` is the circulant `Σₖ cₖ Σ₁ᵏ` with `cₖ = (1/n) Σⱼ xⱼ σ^{jk}`. A
//! depressed equation has trace zero, so `c₀ = 0`. Going back,
//! `xⱼ = Σₖ cₖ σ^{−jk}`.

use crate::cardano::CubicCoeffs;
use crate::error::{Error, Result};
use crate::ferrari::QuarticCoeffs;
use crate::matrix::{circulant_from_coeffs, conjugate_by, walsh_hadamard, SquareMatrix};
use crate::numerics::{unity_root, Complex};
use crate::polynomial::Polynomial;

/// Relative tolerance for circulant structure and the vanishing diagonal.
pub const STRUCTURE_TOLERANCE: f64 = 1e-9;

pub fn root_matrix(roots: &[Complex]) -> Result<SquareMatrix> {
    SquareMatrix::from_diagonal(roots)
}

/// `cₖ = (1/n) Σⱼ xⱼ σ^{jk}`, evaluated directly without forming matrices.
pub fn circulant_coefficients(roots: &[Complex]) -> Vec<Complex> {
    let n = roots.len();
    (0..n)
        .map(|k| {
            roots
                .iter()
                .enumerate()
                .map(|(j, &x)| x * unity_root(n as u32, (j * k) as i64))
                .sum::<Complex>()
                / n as f64
        })
        .collect()
}

/// Conjugates the root matrix, checks that the result is a circulant with
/// zero diagonal and returns its first column `(c₀ ≈ 0, c₁, …, cₙ₋₁)`.
///
/// For a cubic this is `(0, α, β)`, for a quartic `(0, α, γ, β)`.
pub fn extract_circulant_coeffs(roots: &[Complex]) -> Result<Vec<Complex>> {
    let conjugated = conjugated_root_matrix(roots)?;
    let scale = roots.iter().map(|x| x.norm()).fold(1.0, f64::max);
    let deviation = conjugated.circulant_deviation();
    if deviation > STRUCTURE_TOLERANCE * scale {
        return Err(Error::NotCirculant { deviation });
    }
    let diagonal = conjugated[(0, 0)].norm();
    if diagonal > STRUCTURE_TOLERANCE * scale {
        return Err(Error::NotDepressed { diagonal });
    }
    Ok(conjugated.first_column())
}

/// `W†AW` for the diagonal root matrix `A`.
pub fn conjugated_root_matrix(roots: &[Complex]) -> Result<SquareMatrix> {
    let a = root_matrix(roots)?;
    let w = walsh_hadamard(roots.len())?;
    conjugate_by(&w, &a)
}

/// Inverse of [`extract_circulant_coeffs`].
///
/// Degrees three and four use the explicit superposition rows; other sizes
/// read the diagonal of `W · circulant · W†`.
pub fn reconstruct_roots(coeffs: &[Complex]) -> Result<Vec<Complex>> {
    match *coeffs {
        [_, alpha, beta] => Ok(CubicCoeffs { alpha, beta }.roots().to_vec()),
        [_, alpha, gamma, beta] => Ok(QuarticCoeffs { alpha, beta, gamma }.roots().to_vec()),
        _ => {
            let c = circulant_from_coeffs(coeffs)?;
            let w = walsh_hadamard(coeffs.len())?;
            Ok(conjugate_by(&w.adjoint(), &c)?.diagonal())
        }
    }
}

/// Largest entry of `P(M)`, evaluated by Horner's scheme over matrices.
pub fn matrix_equation_residual(m: &SquareMatrix, poly: &Polynomial) -> f64 {
    let n = m.dim();
    let identity = SquareMatrix::identity(n).expect("valid dimension");
    let value = poly.coeffs().iter().rev().fold(
        SquareMatrix::zeros(n).expect("valid dimension"),
        |acc, &c| &(&acc * m) + &identity.scaled(c),
    );
    value.max_abs()
}

/// Whether every entry on the diagonal is zero within tolerance.
pub fn zero_diagonal(m: &SquareMatrix, scale: f64) -> bool {
    m.diagonal()
        .iter()
        .all(|d| d.norm() <= STRUCTURE_TOLERANCE * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::sigma3;
    use crate::numerics::{ONE, ZERO};

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn root_matrix_examples() {
        let s = unity_root(3, 1);
        let m = root_matrix(&[ONE, s, s * s]).unwrap();
        assert!(m.max_abs_diff(&sigma3(3).unwrap()) < 1e-15);
        assert_eq!(root_matrix(&[ZERO; 3]).unwrap().max_abs(), 0.0);
        assert_eq!(
            root_matrix(&[c(0.), c(1.), c(2.), c(-3.)]).unwrap().diagonal(),
            vec![c(0.), c(1.), c(2.), c(-3.)]
        );
    }

    #[test]
    fn extract_cube_roots_of_unity() {
        let s = unity_root(3, 1);
        let k = extract_circulant_coeffs(&[ONE, s, s * s]).unwrap();
        assert!(k[0].norm() < 1e-15);
        assert!(k[1].norm() < 1e-15, "α = {}", k[1]);
        assert!((k[2] - ONE).norm() < 1e-15, "β = {}", k[2]);

        assert_eq!(extract_circulant_coeffs(&[ZERO; 3]).unwrap(), vec![ZERO; 3]);
    }

    #[test]
    fn extract_quartic_example() {
        // γ = (x₁ − x₂ + x₃ − x₄)/4 = (0 − 1 + 2 + 3)/4 = 1
        let k = extract_circulant_coeffs(&[c(0.), c(1.), c(2.), c(-3.)]).unwrap();
        assert!((k[2] - ONE).norm() < 1e-15);
        let direct = circulant_coefficients(&[c(0.), c(1.), c(2.), c(-3.)]);
        for (a, b) in k.iter().zip(&direct) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn rejects_non_depressed() {
        let err = extract_circulant_coeffs(&[c(1.), c(2.), c(3.)]).unwrap_err();
        assert!(matches!(err, Error::NotDepressed { .. }));
    }

    #[test]
    fn reconstruct_examples() {
        let s = unity_root(3, 1);
        let roots = reconstruct_roots(&[ZERO, ONE, ZERO]).unwrap();
        for (got, want) in roots.iter().zip([ONE, s * s, s]) {
            assert!((got - want).norm() < 1e-15);
        }
        assert_eq!(reconstruct_roots(&[ZERO; 3]).unwrap(), vec![ZERO; 3]);
    }

    #[test]
    fn general_size_round_trip() {
        let roots: Vec<Complex> = [1.0, -2.5, 0.5, 3.0, -2.0]
            .iter()
            .enumerate()
            .map(|(j, &v)| Complex::new(v, j as f64 - 2.0))
            .collect();
        let k = circulant_coefficients(&roots);
        let back = reconstruct_roots(&k).unwrap();
        for (a, b) in back.iter().zip(&roots) {
            assert!((a - b).norm() < 1e-13);
        }
    }

    #[test]
    fn matrix_equation_of_worked_quartic() {
        let poly = Polynomial::from_real(&[0., 6., -7., 0., 1.]).unwrap();
        let a = root_matrix(&[c(0.), c(1.), c(2.), c(-3.)]).unwrap();
        assert_eq!(matrix_equation_residual(&a, &poly), 0.0);
        let conj = conjugated_root_matrix(&[c(0.), c(1.), c(2.), c(-3.)]).unwrap();
        assert!(matrix_equation_residual(&conj, &poly) < 1e-12);
        assert!(zero_diagonal(&conj, 3.0));
    }
}
