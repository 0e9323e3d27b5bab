//! The `matrix` subcommand: shift powers, clock matrix and `W` for one size.

use std::fmt::Write as _;

use radical_core::matrix::{sigma1, sigma3, walsh_hadamard};
use radical_core::{Result, SquareMatrix};
use serde::Serialize;

use crate::report::JsonComplex;

pub struct MatrixSet {
    pub n: usize,
    /// `Σ₁ᵏ` for `k = 1 … n−1`.
    pub shifts: Vec<SquareMatrix>,
    pub clock: SquareMatrix,
    pub dft: SquareMatrix,
}

pub fn matrix_set(n: usize) -> Result<MatrixSet> {
    Ok(MatrixSet {
        n,
        shifts: (1..n).map(|k| sigma1(n, k)).collect::<Result<_>>()?,
        clock: sigma3(n)?,
        dft: walsh_hadamard(n)?,
    })
}

pub fn to_text(set: &MatrixSet) -> String {
    let mut out = String::new();
    for (k, m) in set.shifts.iter().enumerate() {
        let _ = writeln!(out, "sigma1^{} (n = {}):\n{m}", k + 1, set.n);
    }
    let _ = writeln!(out, "sigma3 (n = {}):\n{}", set.n, set.clock);
    let _ = write!(out, "W (n = {}):\n{}", set.n, set.dft);
    out
}

type Rows = Vec<Vec<JsonComplex>>;

#[derive(Serialize)]
struct JsonShift {
    power: usize,
    matrix: Rows,
}

#[derive(Serialize)]
struct JsonMatrixSet {
    n: usize,
    sigma1: Vec<JsonShift>,
    sigma3: Rows,
    w: Rows,
}

fn rows(m: &SquareMatrix) -> Rows {
    (0..m.dim())
        .map(|i| m.row(i).iter().map(|&z| z.into()).collect())
        .collect()
}

pub fn to_json(set: &MatrixSet) -> String {
    let doc = JsonMatrixSet {
        n: set.n,
        sigma1: set
            .shifts
            .iter()
            .enumerate()
            .map(|(k, m)| JsonShift {
                power: k + 1,
                matrix: rows(m),
            })
            .collect(),
        sigma3: rows(&set.clock),
        w: rows(&set.dft),
    };
    serde_json::to_string_pretty(&doc).expect("matrices serialize")
}
