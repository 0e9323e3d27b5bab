#![allow(dead_code)]

use radical_core::oracle::{match_rootsets, solve_numeric, DEFAULT_MAX_ITER};
use radical_core::{Complex, Polynomial, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complex number with both components uniform in `[−bound, bound]`.
pub fn complex(rng: &mut ChaCha8Rng, bound: f64) -> Complex {
    Complex::new(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound))
}

pub fn cubic_scale(p: Complex, q: Complex) -> f64 {
    1f64.max(p.norm()).max(q.norm()).powf(1.5)
}

pub fn quartic_scale(p: Complex, q: Complex, r: Complex) -> f64 {
    1f64.max(p.norm()).max(q.norm()).max(r.norm()).powi(2)
}

pub fn root_scale(roots: &[Complex]) -> f64 {
    roots.iter().map(|z| z.norm()).fold(1.0, f64::max)
}

pub fn oracle_roots(poly: &Polynomial) -> Vec<Complex> {
    solve_numeric(poly, DEFAULT_MAX_ITER, &Tolerance::default())
        .expect("oracle converges on well-separated roots")
        .into_roots()
}

pub fn distance(a: &[Complex], b: &[Complex]) -> f64 {
    match_rootsets(a, b).expect("equal sizes").max_distance
}

pub fn min_separation(roots: &[Complex]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}
