//! Generalized Pauli matrices and the generalized Walsh-Hadamard matrix.
//!
//! For dimension `n` with `σ = e^{2πi/n}`:
//!
//! * `Σ₁` is the cyclic shift, with a 1 at `(i+1 mod n, i)`;
//! * `Σ₃ = diag(1, σ, …, σⁿ⁻¹)` is the clock matrix;
//! * `W[a][b] = σ^{(n−a)·b}/√n` is the unitary Vandermonde (DFT) matrix, so
//!   that `W†[a][b] = σ^{ab}/√n`.
//!
//! They satisfy `Σ₁ⁿ = Σ₃ⁿ = 1`, `Σ₃Σ₁ = σΣ₁Σ₃` and `Σ₁ = WΣ₃W†`. The
//! solvers conjugate the diagonal root matrix the other way round,
//! `W†AW`, which turns it into a circulant `Σₖ cₖ Σ₁ᵏ` with
//! `cₖ = (1/n) Σⱼ xⱼ σ^{jk}`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::numerics::{unity_root, Complex, ONE, ZERO};

/// Largest supported dimension.
pub const MAX_DIMENSION: usize = 64;

/// Dense row-major `n × n` complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Complex>,
}

fn check_dimension(n: usize, min: usize) -> Result<()> {
    if (min..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::Dimension(n))
    }
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        check_dimension(n, 1)?;
        Ok(Self {
            n,
            entries: vec![ZERO; n * n],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_diagonal(&vec![ONE; n])
    }

    pub fn from_diagonal(diag: &[Complex]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        Ok(m)
    }

    /// Builds a matrix from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<Complex>]) -> Result<Self> {
        let n = rows.len();
        check_dimension(n, 1)?;
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch(n, row.len()));
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { n, entries })
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> Complex) -> Self {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn diagonal(&self) -> Vec<Complex> {
        (0..self.n).map(|i| self[(i, i)]).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scaled(&self, factor: Complex) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).map(|k| self[(i, k)] * rhs[(k, j)]).sum()
        }))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        Ok(Self {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut out = Self::identity(self.n).expect("dimension already validated");
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise distance; panics on dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest deviation of any entry from the first-column value of its
    /// wrapped diagonal; zero exactly when the matrix is circulant.
    pub fn circulant_deviation(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let k = (i + n - j) % n;
                worst = worst.max((self[(i, j)] - self[(k, 0)]).norm());
            }
        }
        worst
    }

    /// First column, i.e. the coefficients `cₖ` of `Σₖ cₖ Σ₁ᵏ` when the
    /// matrix is circulant.
    pub fn first_column(&self) -> Vec<Complex> {
        (0..self.n).map(|i| self[(i, 0)]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for SquareMatrix {
    type Output = Complex;

    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.entries[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.entries[i * self.n + j]
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;

    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;

    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;

    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_add(&rhs.scaled(-ONE)).expect("dimension mismatch")
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|&z| format_complex(z)).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for i in 0..self.n {
            let row: Vec<String> = cells[i * self.n..(i + 1) * self.n]
                .iter()
                .map(|s| format!("{s:>width$}"))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

/// Compact `a+bi` rendering with six decimals, trailing zeros trimmed and
/// `-0` folded to `0`.
pub fn format_complex(z: Complex) -> String {
    fn num(v: f64) -> String {
        let s = format!("{:.6}", v);
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".to_string()
        } else {
            s.to_string()
        }
    }
    let re = num(z.re);
    let im = num(z.im);
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", "1") => "i".to_string(),
        ("0", "-1") => "-i".to_string(),
        ("0", _) => format!("{im}i"),
        (_, "1") => format!("{re}+i"),
        (_, "-1") => format!("{re}-i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

/// `Σ₁ᵖᵒʷᵉʳ`: a 1 at `(i + power mod n, i)`. `power = 0` gives the identity.
pub fn sigma1(n: usize, power: usize) -> Result<SquareMatrix> {
    check_dimension(n, 2)?;
    let shift = power % n;
    Ok(SquareMatrix::from_fn(n, |i, j| {
        if i == (j + shift) % n {
            ONE
        } else {
            ZERO
        }
    }))
}

/// `Σ₃ = diag(1, σ, σ², …, σⁿ⁻¹)`.
pub fn sigma3(n: usize) -> Result<SquareMatrix> {
    check_dimension(n, 2)?;
    let diag: Vec<Complex> = (0..n as i64).map(|k| unity_root(n as u32, k)).collect();
    SquareMatrix::from_diagonal(&diag)
}

/// Generalized Walsh-Hadamard matrix; row `a` has ratio `σ^{(n−a) mod n}`.
pub fn walsh_hadamard(n: usize) -> Result<SquareMatrix> {
    check_dimension(n, 2)?;
    let norm = 1.0 / (n as f64).sqrt();
    Ok(SquareMatrix::from_fn(n, |a, b| {
        let ratio = ((n - a) % n) as i64;
        unity_root(n as u32, ratio * b as i64) * norm
    }))
}

/// The adjoint action `W† A W`.
pub fn conjugate_by(w: &SquareMatrix, a: &SquareMatrix) -> Result<SquareMatrix> {
    w.adjoint().try_mul(a)?.try_mul(w)
}

/// `Σₖ c[k] Σ₁ᵏ`, with `c[0]` the coefficient of the identity.
pub fn circulant_from_coeffs(c: &[Complex]) -> Result<SquareMatrix> {
    let n = c.len();
    check_dimension(n, 2)?;
    Ok(SquareMatrix::from_fn(n, |i, j| c[(i + n - j) % n]))
}
