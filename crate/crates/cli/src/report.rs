//! JSON and text renderings of solve reports.

use std::fmt::Write as _;

use radical_core::matrix::format_complex;
use radical_core::Complex;
use serde::{Deserialize, Serialize};

use crate::solve::SolveReport;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for JsonComplex {
    fn from(z: Complex) -> Self {
        // adding +0 folds -0 away and leaves every other value unchanged
        Self {
            re: z.re + 0.0,
            im: z.im + 0.0,
        }
    }
}

impl From<JsonComplex> for Complex {
    fn from(z: JsonComplex) -> Self {
        Complex::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonCheck {
    pub name: String,
    pub pass: bool,
    pub value: f64,
    pub threshold: f64,
}

/// Serialized form of a [`SolveReport`]. Coefficient lists are
/// constant-first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub polynomial: Vec<JsonComplex>,
    pub roots: Vec<JsonRoot>,
    pub method: String,
    pub shift: JsonComplex,
    pub superposition: Option<Vec<JsonComplex>>,
    pub checks: Vec<JsonCheck>,
    pub time_ns: u64,
}

impl From<&SolveReport> for JsonReport {
    fn from(r: &SolveReport) -> Self {
        Self {
            polynomial: r.polynomial.coeffs().iter().map(|&c| c.into()).collect(),
            roots: r
                .roots
                .roots()
                .iter()
                .zip(r.roots.residuals())
                .map(|(&z, &residual)| {
                    let JsonComplex { re, im } = z.into();
                    JsonRoot { re, im, residual }
                })
                .collect(),
            method: r.route.name().to_string(),
            shift: r.shift.into(),
            superposition: r
                .superposition
                .as_ref()
                .map(|c| c.iter().map(|&z| z.into()).collect()),
            checks: r
                .checks
                .iter()
                .map(|c| JsonCheck {
                    name: c.name.to_string(),
                    pass: c.pass,
                    value: c.value,
                    threshold: c.threshold,
                })
                .collect(),
            time_ns: r.time_ns,
        }
    }
}

/// Failed line in batch mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonError {
    pub input: String,
    pub error: String,
}

pub fn to_json(report: &SolveReport) -> String {
    serde_json::to_string_pretty(&JsonReport::from(report)).expect("report serializes")
}

/// Single-line JSON, used for batch output.
pub fn to_json_line(report: &SolveReport) -> String {
    serde_json::to_string(&JsonReport::from(report)).expect("report serializes")
}

/// Twelve decimals, with values that round to zero printed unsigned.
fn fixed(v: f64) -> String {
    let s = format!("{v:.12}");
    if s.bytes().all(|b| matches!(b, b'-' | b'0' | b'.')) {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn root_cell(z: Complex) -> String {
    let im = fixed(z.im);
    match im.strip_prefix('-') {
        Some(mag) => format!("{}-{mag}i", fixed(z.re)),
        None => format!("{}+{im}i", fixed(z.re)),
    }
}

fn sci(v: f64) -> String {
    format!("{v:.2e}")
}

pub fn to_text(report: &SolveReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "method: {}", report.route);
    let _ = writeln!(out, "shift:  {}", format_complex(report.shift));
    if let Some(c) = &report.superposition {
        let cells: Vec<String> = c.iter().map(|&z| format_complex(z)).collect();
        let _ = writeln!(out, "superposition: ({})", cells.join(", "));
    }
    let cells: Vec<String> = report
        .roots
        .roots()
        .iter()
        .map(|&z| root_cell(z))
        .collect();
    let width = cells.iter().map(String::len).max().unwrap_or(4).max(4);
    let _ = writeln!(out, "\n  #  {:<width$}  residual", "root");
    for (k, (cell, res)) in cells.iter().zip(report.roots.residuals()).enumerate() {
        let _ = writeln!(out, "  {:<2} {cell:<width$}  {}", k + 1, sci(*res));
    }
    if !report.checks.is_empty() {
        let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let _ = writeln!(out, "\nchecks:");
        for c in &report.checks {
            let verdict = if c.pass { "pass" } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {:<width$}  {verdict}  {} (limit {})",
                c.name,
                sci(c.value),
                sci(c.threshold)
            );
        }
    }
    let _ = writeln!(out, "\ntime: {} ns", report.time_ns);
    out
}
