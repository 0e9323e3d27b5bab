use thiserror::Error;

use crate::polynomial::RootSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("expected a polynomial of degree {expected}, found degree {found}")]
    Degree { expected: usize, found: usize },

    #[error("cannot normalize a polynomial whose coefficients are all zero")]
    Normalization,

    #[error("linear equation has a zero leading coefficient")]
    DegenerateDegree,

    #[error("matrix dimension {0} is outside the supported range 2..={max}", max = crate::matrix::MAX_DIMENSION)]
    Dimension(usize),

    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("tolerance thresholds must be positive and finite (abs {abs_eps}, rel {rel_eps})")]
    InvalidTolerance { abs_eps: f64, rel_eps: f64 },

    #[error("conjugated root matrix is not circulant (deviation {deviation:.3e})")]
    NotCirculant { deviation: f64 },

    #[error("roots are not those of a depressed equation (diagonal {diagonal:.3e})")]
    NotDepressed { diagonal: f64 },

    #[error("no sign assignment satisfies the square-root product constraint (mismatch {mismatch:.3e})")]
    SignSelection { mismatch: f64 },

    #[error("Durand-Kerner did not converge after {iterations} iterations (last update {last_update:.3e})")]
    Convergence {
        iterations: usize,
        last_update: f64,
        best: RootSet,
    },

    #[error("root sets differ in size: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("root set of size {0} is too large for exhaustive matching")]
    MatchTooLarge(usize),
}
