//! Seeded timing and cross-method consistency benchmark.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use radical_core::oracle::{match_rootsets, solve_numeric_best_effort, DEFAULT_MAX_ITER};
use radical_core::{Complex, Polynomial, Tolerance};
use serde::Serialize;

use crate::solve::{run_solve, Method, SolveRequest};

/// Coefficient components are drawn uniformly from `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: f64 = 10.0;

/// Discrepancy bound, relative to root scale, beyond which a run is
/// reported inconsistent.
pub const CONSISTENCY_BOUND: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchSpec {
    pub count: usize,
    pub degree: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub method: String,
    pub median_ns: u64,
    pub p95_ns: u64,
    /// Largest root discrepancy against the reference method, relative to
    /// root scale: the oracle for closed-form rows, the first closed-form
    /// method for the oracle row.
    pub max_discrepancy: f64,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub count: usize,
    pub degree: usize,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn consistent(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.failures == 0 && r.max_discrepancy <= CONSISTENCY_BOUND)
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum BenchError {
    #[error("benchmark degree must be 2, 3 or 4, got {0}")]
    Degree(usize),
    #[error("benchmark count must be at least 1")]
    Count,
}

/// Monic polynomials of the given degree with seeded random coefficients.
pub fn bench_polynomials(spec: &BenchSpec) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| {
            let mut coeffs: Vec<Complex> = (0..spec.degree)
                .map(|_| {
                    Complex::new(
                        rng.random_range(-COEFF_BOUND..=COEFF_BOUND),
                        rng.random_range(-COEFF_BOUND..=COEFF_BOUND),
                    )
                })
                .collect();
            coeffs.push(Complex::new(1.0, 0.0));
            Polynomial::new(coeffs).expect("finite coefficients")
        })
        .collect()
}

fn closed_form_methods(degree: usize) -> &'static [Method] {
    match degree {
        2 => &[Method::Auto],
        3 => &[Method::Cardano],
        _ => &[Method::FerrariCirculant, Method::FerrariClassical, Method::Euler],
    }
}

fn percentile(sorted: &[u64], fraction: f64) -> u64 {
    let rank = ((sorted.len() as f64 * fraction).ceil() as usize).clamp(1, sorted.len());
    sorted[rank - 1]
}

fn relative_distance(a: &[Complex], b: &[Complex]) -> f64 {
    let scale = b.iter().map(|z| z.norm()).fold(1.0, f64::max);
    match_rootsets(a, b).map_or(f64::INFINITY, |m| m.max_distance / scale)
}

struct Samples {
    times: Vec<u64>,
    discrepancy: f64,
    failures: usize,
}

impl Samples {
    fn new(count: usize) -> Self {
        Self {
            times: Vec::with_capacity(count),
            discrepancy: 0.0,
            failures: 0,
        }
    }

    fn row(mut self, method: &str) -> BenchRow {
        self.times.sort_unstable();
        let (median_ns, p95_ns) = if self.times.is_empty() {
            (0, 0)
        } else {
            (percentile(&self.times, 0.5), percentile(&self.times, 0.95))
        };
        BenchRow {
            method: method.to_string(),
            median_ns,
            p95_ns,
            max_discrepancy: self.discrepancy,
            failures: self.failures,
        }
    }
}

pub fn run_bench(spec: &BenchSpec, tol: &Tolerance) -> Result<BenchReport, BenchError> {
    if !(2..=4).contains(&spec.degree) {
        return Err(BenchError::Degree(spec.degree));
    }
    if spec.count == 0 {
        return Err(BenchError::Count);
    }
    let methods = closed_form_methods(spec.degree);
    let mut closed: Vec<Samples> = methods.iter().map(|_| Samples::new(spec.count)).collect();
    let mut oracle = Samples::new(spec.count);

    for poly in bench_polynomials(spec) {
        let start = Instant::now();
        let reference = solve_numeric_best_effort(&poly, DEFAULT_MAX_ITER, tol);
        oracle.times.push(start.elapsed().as_nanos() as u64);
        let Ok(reference) = reference else {
            oracle.failures += 1;
            continue;
        };

        for (k, (&method, samples)) in methods.iter().zip(closed.iter_mut()).enumerate() {
            let req = SolveRequest {
                method,
                tolerance: *tol,
                ..SolveRequest::new(poly.clone())
            };
            match run_solve(&req) {
                Ok(report) => {
                    samples.times.push(report.time_ns);
                    let d = relative_distance(report.roots.roots(), reference.roots());
                    samples.discrepancy = samples.discrepancy.max(d);
                    if k == 0 {
                        oracle.discrepancy = oracle.discrepancy.max(d);
                    }
                }
                Err(_) => samples.failures += 1,
            }
        }
    }

    let mut rows: Vec<BenchRow> = methods
        .iter()
        .zip(closed)
        .map(|(m, s)| {
            let name = if *m == Method::Auto { "quadratic" } else { m.name() };
            s.row(name)
        })
        .collect();
    rows.push(oracle.row("oracle"));
    Ok(BenchReport {
        count: spec.count,
        degree: spec.degree,
        seed: spec.seed,
        rows,
    })
}

pub fn to_text(report: &BenchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "degree {}, {} polynomials, seed {}",
        report.degree, report.count, report.seed
    );
    let _ = writeln!(
        out,
        "{:<18} {:>12} {:>12} {:>16} {:>9}",
        "method", "median_ns", "p95_ns", "max_discrepancy", "failures"
    );
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{:<18} {:>12} {:>12} {:>16.3e} {:>9}",
            r.method, r.median_ns, r.p95_ns, r.max_discrepancy, r.failures
        );
    }
    out
}

pub fn to_json(report: &BenchReport) -> String {
    serde_json::to_string_pretty(report).expect("bench report serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_quadratic_row() {
        let spec = BenchSpec {
            count: 1,
            degree: 2,
            seed: 0,
        };
        let report = run_bench(&spec, &Tolerance::default()).unwrap();
        let names: Vec<_> = report.rows.iter().map(|r| r.method.as_str()).collect();
        assert_eq!(names, ["quadratic", "oracle"]);
        assert!(report.consistent());
    }

    #[test]
    fn rejects_bad_specs() {
        let tol = Tolerance::default();
        let spec = |count, degree| BenchSpec { count, degree, seed: 1 };
        assert_eq!(run_bench(&spec(5, 5), &tol), Err(BenchError::Degree(5)));
        assert_eq!(run_bench(&spec(0, 3), &tol), Err(BenchError::Count));
    }

    #[test]
    fn polynomials_are_seeded() {
        let spec = BenchSpec {
            count: 20,
            degree: 4,
            seed: 7,
        };
        let a = bench_polynomials(&spec);
        assert_eq!(a, bench_polynomials(&spec));
        assert_ne!(a, bench_polynomials(&BenchSpec { seed: 8, ..spec }));
        assert!(a.iter().all(|p| p.degree() == 4 && p.leading() == Complex::new(1.0, 0.0)));
    }

    #[test]
    fn percentiles() {
        let v: Vec<u64> = (1..=100).collect();
        assert_eq!(percentile(&v, 0.5), 50);
        assert_eq!(percentile(&v, 0.95), 95);
        assert_eq!(percentile(&[7], 0.95), 7);
    }
}
