//! Durand-Kerner simultaneous iteration, the independent check on every
//! closed-form path and the only solver for degree five and above.

use crate::error::{Error, Result};
use crate::numerics::{ensure_finite, Complex, Tolerance};
use crate::polynomial::{Polynomial, RootSet};

pub const DEFAULT_MAX_ITER: usize = 200;

/// Largest root set [`match_rootsets`] will match exhaustively.
pub const MAX_MATCH_SIZE: usize = 8;

const SEED: Complex = Complex::new(0.4, 0.9);

/// All roots of `poly`, starting from the staggered guesses
/// `(0.4 + 0.9i)ᵏ`.
///
/// Each sweep replaces `zᵢ` by `zᵢ − P(zᵢ) / ∏ⱼ≠ᵢ (zᵢ − zⱼ)` in place. The
/// iteration stops once the largest update is within `tol` of the current
/// root scale; multiple roots converge only linearly and may exhaust
/// `max_iter`, in which case the error carries the last iterate.
pub fn solve_numeric(poly: &Polynomial, max_iter: usize, tol: &Tolerance) -> Result<RootSet> {
    let monic = poly.monic()?;
    let n = monic.degree();
    if n == 0 {
        return Err(Error::Degree { expected: 1, found: 0 });
    }

    let mut z: Vec<Complex> = std::iter::successors(Some(Complex::new(1.0, 0.0)), |w| Some(w * SEED))
        .take(n)
        .collect();
    let mut last_update = f64::INFINITY;

    for _ in 0..max_iter {
        last_update = 0.0;
        for i in 0..n {
            let zi = z[i];
            let denom: Complex = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &zj)| zi - zj)
                .product();
            let value = monic.eval(zi);
            if value == Complex::new(0.0, 0.0) {
                continue;
            }
            if denom == Complex::new(0.0, 0.0) {
                // coincident iterates: nudge apart and keep sweeping
                z[i] = zi * Complex::new(1.0, 1e-8) + Complex::new(1e-8, 0.0);
                last_update = f64::INFINITY;
                continue;
            }
            let step = ensure_finite(value / denom, "Durand-Kerner update")?;
            z[i] = zi - step;
            last_update = last_update.max(step.norm());
        }
        let scale = z.iter().map(|w| w.norm()).fold(1.0, f64::max);
        if last_update <= tol.threshold(scale) {
            return Ok(RootSet::measured(z, poly));
        }
    }

    Err(Error::Convergence {
        iterations: max_iter,
        last_update,
        best: RootSet::measured(z, poly),
    })
}

/// Oracle roots, falling back to the last iterate when the iteration stalls
/// (clustered roots).
pub fn solve_numeric_best_effort(poly: &Polynomial, max_iter: usize, tol: &Tolerance) -> Result<RootSet> {
    match solve_numeric(poly, max_iter, tol) {
        Err(Error::Convergence { best, .. }) => Ok(best),
        other => other,
    }
}

/// Optimal pairing between two root multisets.
#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    /// `pairing[i]` is the index in `b` matched to `a[i]`.
    pub pairing: Vec<usize>,
    pub max_distance: f64,
    pub total_distance: f64,
}

/// Exhaustive minimum-cost perfect matching.
///
/// Minimizes the largest paired distance, then the total distance.
pub fn match_rootsets(a: &[Complex], b: &[Complex]) -> Result<Matching> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    if a.len() > MAX_MATCH_SIZE {
        return Err(Error::MatchTooLarge(a.len()));
    }
    let n = a.len();
    let dist: Vec<Vec<f64>> = a.iter().map(|x| b.iter().map(|y| (x - y).norm()).collect()).collect();

    let mut best = Matching {
        pairing: (0..n).collect(),
        max_distance: f64::INFINITY,
        total_distance: f64::INFINITY,
    };
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(&dist, &mut current, &mut used, 0.0, 0.0, &mut best);
    if n == 0 {
        best.max_distance = 0.0;
        best.total_distance = 0.0;
    }
    Ok(best)
}

fn search(
    dist: &[Vec<f64>],
    current: &mut Vec<usize>,
    used: &mut [bool],
    max_so_far: f64,
    total_so_far: f64,
    best: &mut Matching,
) {
    let i = current.len();
    if i == dist.len() {
        if (max_so_far, total_so_far) < (best.max_distance, best.total_distance) {
            best.pairing = current.clone();
            best.max_distance = max_so_far;
            best.total_distance = total_so_far;
        }
        return;
    }
    for j in 0..dist.len() {
        if used[j] {
            continue;
        }
        let max = max_so_far.max(dist[i][j]);
        if max > best.max_distance {
            continue;
        }
        used[j] = true;
        current.push(j);
        search(dist, current, used, max, total_so_far + dist[i][j], best);
        current.pop();
        used[j] = false;
    }
}
