//! Complex scalars, the tolerance policy and radical branch conventions.
//!
//! Every radical in the crate goes through [`principal_nth_root`], so all
//! solvers share one branch: `arg(w) ∈ (−π/n, π/n]`. The closed-form
//! formulas are branch-covariant (another consistent choice permutes the
//! roots without changing the multiset), the principal branch simply makes
//! results reproducible.

use std::f64::consts::PI;

use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// Absolute and relative thresholds used for every approximate comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    abs_eps: f64,
    rel_eps: f64,
}

impl Tolerance {
    pub const DEFAULT_ABS: f64 = 1e-10;
    pub const DEFAULT_REL: f64 = 1e-10;

    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        let valid = |v: f64| v.is_finite() && v > 0.0;
        if valid(abs_eps) && valid(rel_eps) {
            Ok(Self { abs_eps, rel_eps })
        } else {
            Err(Error::InvalidTolerance { abs_eps, rel_eps })
        }
    }

    pub fn abs_eps(&self) -> f64 {
        self.abs_eps
    }

    pub fn rel_eps(&self) -> f64 {
        self.rel_eps
    }

    /// `abs_eps + rel_eps * scale`.
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs_eps + self.rel_eps * scale
    }

    /// True when `value` is indistinguishable from zero at the given scale.
    pub fn is_negligible(&self, value: f64, scale: f64) -> bool {
        value <= self.threshold(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_eps: Self::DEFAULT_ABS,
            rel_eps: Self::DEFAULT_REL,
        }
    }
}

/// `|a − b| ≤ abs_eps + rel_eps · max(scale, |a|, |b|)`.
pub fn approx_eq(a: Complex, b: Complex, tol: &Tolerance, scale: f64) -> bool {
    let scale = scale.max(a.norm()).max(b.norm());
    (a - b).norm() <= tol.threshold(scale)
}

/// Rejects NaN and infinite components.
pub fn ensure_finite(z: Complex, context: &'static str) -> Result<Complex> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(context))
    }
}

/// `σᵏ` with `σ = e^{2πi/n}`.
///
/// The angle is reduced modulo `n` and evaluated directly; quarter turns are
/// returned exactly.
pub fn unity_root(n: u32, k: i64) -> Complex {
    assert!(n >= 1, "unity_root requires n >= 1");
    let n_i = i64::from(n);
    let k = k.rem_euclid(n_i);
    if (4 * k) % n_i == 0 {
        return match 4 * k / n_i {
            0 => ONE,
            1 => I,
            2 => -ONE,
            _ => -I,
        };
    }
    let (sin, cos) = (2.0 * PI * k as f64 / n as f64).sin_cos();
    Complex::new(cos, sin)
}

/// Principal square root, `arg ∈ (−π/2, π/2]`.
///
/// A signed-zero imaginary part is treated as `+0` so that negative reals map
/// to the positive imaginary axis.
pub fn principal_sqrt(z: Complex) -> Complex {
    if z.re == 0.0 && z.im == 0.0 {
        return ZERO;
    }
    let r = z.norm();
    if z.re >= 0.0 {
        let t = ((r + z.re) / 2.0).sqrt();
        Complex::new(t, z.im / (2.0 * t))
    } else {
        let t = ((r - z.re) / 2.0).sqrt();
        let sign = if z.im < 0.0 { -1.0 } else { 1.0 };
        Complex::new(z.im.abs() / (2.0 * t), sign * t)
    }
}

/// Principal `n`-th root: `wⁿ = z` with `arg(w) ∈ (−π/n, π/n]`.
pub fn principal_nth_root(z: Complex, n: u32) -> Complex {
    assert!(n >= 1, "principal_nth_root requires n >= 1");
    if z.re == 0.0 && z.im == 0.0 {
        return ZERO;
    }
    match n {
        1 => z,
        2 => principal_sqrt(z),
        _ => {
            let mut theta = z.im.atan2(z.re);
            if theta <= -PI {
                theta = PI;
            }
            let modulus = if n == 3 {
                z.norm().cbrt()
            } else {
                z.norm().powf(1.0 / f64::from(n))
            };
            Complex::from_polar(modulus, theta / f64::from(n))
        }
    }
}

/// Anticlockwise argument in `(−π, π]`, with signed zero folded to `+0`.
pub fn principal_arg(z: Complex) -> f64 {
    let theta = z.im.atan2(z.re);
    if theta <= -PI {
        PI
    } else {
        theta
    }
}
