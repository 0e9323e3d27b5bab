//! The depressed quartic `x⁴ + px² + qx + r = 0`.
//!
//! Two routes live here. The circulant route writes `W†AW = αΣ₁ + γΣ₁² +
//! βΣ₁³`; the matrix equation `A⁴ + pA² + qA + r = 0` splits into four scalar
//! equations in `(α, β, γ)` which reduce to
//!
//! ```text
//! α² + β² = −q/(4γ),    γ² + 2αβ = −p/2,
//! 64Γ³ + 32pΓ² − 4(4r − p²)Γ − q² = 0   with Γ = γ².
//! ```
//!
//! The classical route solves `λ³ − pλ² − 4rλ + (4pr − q²) = 0` and splits
//! the quartic into two quadratics. Both fall back to [`solve_biquadratic`]
//! when `q` vanishes.

use crate::cardano::solve_monic_cubic;
use crate::numerics::{principal_sqrt, unity_root, Complex, Tolerance, ONE, ZERO};
use crate::polynomial::{Polynomial, RootSet};
use crate::quadratic::quadratic_roots;
use crate::superposition::circulant_coefficients;

/// Circulant amplitudes `(α, β, γ)` of a depressed quartic; `W†AW = αΣ₁ +
/// γΣ₁² + βΣ₁³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticCoeffs {
    pub alpha: Complex,
    pub beta: Complex,
    pub gamma: Complex,
}

impl QuarticCoeffs {
    /// `(0, α, γ, β)`: the coefficients of `1, Σ₁, Σ₁², Σ₁³`.
    pub fn circulant(&self) -> [Complex; 4] {
        [ZERO, self.alpha, self.gamma, self.beta]
    }

    /// The superpositions `x₁ = α + γ + β`, `x₂ = σ³α + σ²γ + σβ`,
    /// `x₃ = σ²α + γ + σ²β`, `x₄ = σα + σ²γ + σ³β` with `σ = i`.
    pub fn roots(&self) -> [Complex; 4] {
        let s = |k| unity_root(4, k);
        let (a, b, g) = (self.alpha, self.beta, self.gamma);
        [
            a + g + b,
            s(3) * a + s(2) * g + s(1) * b,
            s(2) * a + g + s(2) * b,
            s(1) * a + s(2) * g + s(3) * b,
        ]
    }

    /// Residuals of the four scalar equations obtained from the matrix
    /// equation, in the rearranged form:
    ///
    /// ```text
    /// (a) (α²+β²)² + (γ²+2αβ)² + 8αβγ² + p(γ²+2αβ) + r
    /// (b) 2γβ(2γ²+6αβ+p) + 4α³γ + qα
    /// (c) (α²+β²)(6γ²+4αβ+p) + qγ
    /// (d) 2αγ(2γ²+6αβ+p) + 4β³γ + qβ
    /// ```
    pub fn system_residuals(&self, p: Complex, q: Complex, r: Complex) -> [f64; 4] {
        let (a, b, g) = (self.alpha, self.beta, self.gamma);
        let sum_sq = a * a + b * b;
        let mixed = g * g + a * b * 2.0;
        let inner = g * g * 2.0 + a * b * 6.0 + p;
        [
            (sum_sq * sum_sq + mixed * mixed + a * b * g * g * 8.0 + p * mixed + r).norm(),
            (g * b * inner * 2.0 + a * a * a * g * 4.0 + q * a).norm(),
            (sum_sq * (g * g * 6.0 + a * b * 4.0 + p) + q * g).norm(),
            (a * g * inner * 2.0 + b * b * b * g * 4.0 + q * b).norm(),
        ]
    }
}

/// `64Γ³ + 32pΓ² − 4(4r − p²)Γ − q²`.
pub fn reduction_resolvent(p: Complex, q: Complex, r: Complex) -> Polynomial {
    Polynomial::new(vec![-(q * q), -(r * 4.0 - p * p) * 4.0, p * 32.0, Complex::new(64.0, 0.0)])
        .expect("finite coefficients")
}

/// `λ³ − pλ² − 4rλ + (4pr − q²)`.
pub fn classical_resolvent(p: Complex, q: Complex, r: Complex) -> Polynomial {
    Polynomial::new(vec![p * r * 4.0 - q * q, -(r * 4.0), -p, ONE]).expect("finite coefficients")
}

/// Roots of a cubic polynomial, in the order the Cardano superpositions
/// produce them.
pub(crate) fn cubic_roots(poly: &Polynomial) -> [Complex; 3] {
    debug_assert_eq!(poly.degree(), 3);
    let lead = poly.leading();
    solve_monic_cubic(poly.coeff(2) / lead, poly.coeff(1) / lead, poly.coeff(0) / lead)
}

/// Picks the resolvent root `z` maximizing `Re(z − offset)`, ties broken by
/// `|z − offset|`, among those with `|z − offset|` above tolerance.
///
/// Returns `z − offset`, or `None` when every candidate is negligible.
pub fn select_resolvent_root(roots: &[Complex], offset: Complex, tol: &Tolerance) -> Option<Complex> {
    let shifted: Vec<Complex> = roots.iter().map(|&z| z - offset).collect();
    let scale = shifted.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let cutoff = tol.threshold(scale);
    shifted
        .into_iter()
        .filter(|z| z.norm() > cutoff)
        .reduce(|best, z| {
            if (z.re - best.re).abs() <= cutoff {
                if z.norm() > best.norm() {
                    z
                } else {
                    best
                }
            } else if z.re > best.re {
                z
            } else {
                best
            }
        })
}

/// Magnitude scale of `q` relative to the quartic's roots: `R³` with `R`
/// the root-scale estimate of `x⁴ + px² + qx + r`.
fn q_scale(p: Complex, q: Complex, r: Complex) -> f64 {
    let poly = Polynomial::new(vec![r, q, p, ZERO, ONE]).expect("finite coefficients");
    poly.root_scale().powi(3)
}

/// Selected `Γ = γ²` for the circulant route, if one is usable.
pub fn select_gamma_squared(p: Complex, q: Complex, r: Complex, tol: &Tolerance) -> Option<Complex> {
    select_resolvent_root(&cubic_roots(&reduction_resolvent(p, q, r)), ZERO, tol)
}

/// Solves for `(α, β, γ)`.
///
/// `γ` is the principal square root of the selected reduction-resolvent
/// root; `α²` and `β²` are the roots of `u² + (q/4γ)u + ((Γ + p/2)/2)²`;
/// `α` is the principal square root of the larger one and `β = −(Γ + p/2) /
/// (2α)` is fixed by the product constraint.
///
/// When no resolvent root is usable (this forces `q ≈ 0`), the biquadratic
/// roots are projected onto the circulant basis instead.
pub fn ferrari_coeffs(p: Complex, q: Complex, r: Complex, tol: &Tolerance) -> QuarticCoeffs {
    let Some(big_gamma) = select_gamma_squared(p, q, r, tol) else {
        return coeffs_from_roots(solve_biquadratic(p, r).roots());
    };
    let gamma = principal_sqrt(big_gamma);
    let sum_sq = -q / (gamma * 4.0);
    let product = -(big_gamma + p / 2.0) / 2.0;
    let [u_big, u_small] = quadratic_roots(-sum_sq, product * product);
    let alpha = principal_sqrt(u_big);
    let beta = if alpha != ZERO {
        product / alpha
    } else {
        principal_sqrt(u_small)
    };
    QuarticCoeffs { alpha, beta, gamma }
}

fn coeffs_from_roots(roots: &[Complex]) -> QuarticCoeffs {
    let c = circulant_coefficients(roots);
    QuarticCoeffs {
        alpha: c[1],
        gamma: c[2],
        beta: c[3],
    }
}

fn depressed_quartic_polynomial(p: Complex, q: Complex, r: Complex) -> Polynomial {
    Polynomial::new(vec![r, q, p, ZERO, ONE]).expect("finite coefficients")
}

/// True when `q` is negligible against the quartic's root scale.
pub fn q_is_negligible(p: Complex, q: Complex, r: Complex, tol: &Tolerance) -> bool {
    tol.is_negligible(q.norm(), q_scale(p, q, r))
}

/// Circulant route; `q ≈ 0` goes to [`solve_biquadratic`].
pub fn solve_depressed_quartic_circulant(p: Complex, q: Complex, r: Complex, tol: &Tolerance) -> RootSet {
    circulant_solution(p, q, r, tol).1
}

/// Circulant route returning the amplitudes alongside the roots.
///
/// On the `q ≈ 0` path the amplitudes are the projection of the
/// biquadratic roots, so `coeffs.roots()` reproduces the returned order.
pub fn circulant_solution(p: Complex, q: Complex, r: Complex, tol: &Tolerance) -> (QuarticCoeffs, RootSet) {
    let poly = depressed_quartic_polynomial(p, q, r);
    if q_is_negligible(p, q, r, tol) {
        let roots = solve_biquadratic(p, r).remeasured(&poly);
        return (coeffs_from_roots(roots.roots()), roots);
    }
    let coeffs = ferrari_coeffs(p, q, r, tol);
    (coeffs, RootSet::measured(coeffs.roots().to_vec(), &poly))
}

/// Classical route: a resolvent root `λ₀ ≠ p` splits the quartic into
/// `x² ± √(λ₀−p)·(x − q/(2(λ₀−p))) + λ₀/2 = 0`.
pub fn solve_depressed_quartic_classical(p: Complex, q: Complex, r: Complex, tol: &Tolerance) -> RootSet {
    let poly = depressed_quartic_polynomial(p, q, r);
    let lambdas = cubic_roots(&classical_resolvent(p, q, r));
    let Some(m) = select_resolvent_root(&lambdas, p, tol) else {
        return solve_biquadratic(p, r).remeasured(&poly);
    };
    let lambda = m + p;
    let s = principal_sqrt(m);
    let offset = q / (m * 2.0);
    let mut roots = Vec::with_capacity(4);
    for sign in [1.0, -1.0] {
        let b = s * sign;
        let c = lambda / 2.0 - b * offset;
        roots.extend(quadratic_roots(b, c));
    }
    RootSet::measured(roots, &poly)
}

/// `x⁴ + px² + r` through `y = x²`: returns `±√y₁, ±√y₂`.
pub fn solve_biquadratic(p: Complex, r: Complex) -> RootSet {
    let poly = depressed_quartic_polynomial(p, ZERO, r);
    let roots = quadratic_roots(p, r)
        .into_iter()
        .flat_map(|y| {
            let s = principal_sqrt(y);
            [s, -s]
        })
        .collect();
    RootSet::measured(roots, &poly)
}
