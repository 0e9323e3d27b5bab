//! Closed-form roots of polynomials of degree at most four.
//!
//! The cubic and quartic solvers follow the circulant superposition picture:
//! the diagonal matrix of roots, conjugated by the generalized Walsh-Hadamard
//! matrix `W`, becomes a zero-diagonal circulant `α Σ₁ + β Σ₁²` (cubic) or
//! `α Σ₁ + γ Σ₁² + β Σ₁³` (quartic). Solving the matrix equation for the
//! circulant coefficients and transforming back yields every root as a
//! root-of-unity weighted superposition of those coefficients.
//!
//! Classical Ferrari and Euler paths are provided for cross-checking, and a
//! Durand-Kerner iteration in [`oracle`] serves as independent ground truth
//! (and as the only path for degree five and above).

pub mod cardano;
pub mod error;
pub mod euler;
pub mod ferrari;
pub mod matrix;
pub mod numerics;
pub mod oracle;
pub mod polynomial;
pub mod quadratic;
pub mod superposition;
pub mod transforms;

pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use numerics::{Complex, Tolerance};
pub use polynomial::{Polynomial, RootSet};
