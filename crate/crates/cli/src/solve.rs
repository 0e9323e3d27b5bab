//! Routing, solving and verification of a single polynomial.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use radical_core::cardano::{cardano_coeffs, CubicCoeffs};
use radical_core::euler::{euler_square_roots, solve_depressed_quartic_euler};
use radical_core::ferrari::{circulant_solution, solve_depressed_quartic_classical, QuarticCoeffs};
use radical_core::numerics::ZERO;
use radical_core::oracle::{match_rootsets, solve_numeric, solve_numeric_best_effort, DEFAULT_MAX_ITER, MAX_MATCH_SIZE};
use radical_core::quadratic::{solve_linear, solve_quadratic};
use radical_core::superposition::{
    conjugated_root_matrix, extract_circulant_coeffs, matrix_equation_residual, reconstruct_roots,
};
use radical_core::transforms::{depress_cubic, depress_quartic};
use radical_core::{Complex, Error, Polynomial, RootSet, Tolerance};

/// Requested solution method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    Cardano,
    FerrariCirculant,
    FerrariClassical,
    Euler,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Auto,
        Method::Cardano,
        Method::FerrariCirculant,
        Method::FerrariClassical,
        Method::Euler,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Cardano => "cardano",
            Method::FerrariCirculant => "ferrari-circulant",
            Method::FerrariClassical => "ferrari-classical",
            Method::Euler => "euler",
            Method::Oracle => "oracle",
        }
    }

    /// Resolves the method to a concrete route for a polynomial of `degree`.
    pub fn route(self, degree: usize) -> Result<Route, SolveError> {
        if degree == 0 {
            return Err(SolveError::Constant);
        }
        let closed_form = !matches!(self, Method::Auto | Method::Oracle);
        if closed_form && degree >= 5 {
            return Err(SolveError::NoAlgebraicPath { degree, method: self });
        }
        let route = match (self, degree) {
            (Method::Oracle, _) => Route::Oracle,
            (Method::Auto, 1) => Route::Linear,
            (Method::Auto, 2) => Route::Quadratic,
            (Method::Auto | Method::Cardano, 3) => Route::Cardano,
            (Method::Auto | Method::FerrariCirculant, 4) => Route::FerrariCirculant,
            (Method::FerrariClassical, 4) => Route::FerrariClassical,
            (Method::Euler, 4) => Route::Euler,
            (Method::Auto, _) => Route::Oracle,
            (method, degree) => return Err(SolveError::MethodDegree { method, degree }),
        };
        Ok(route)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Method::ALL.iter().map(|m| m.name()).collect();
                format!("unknown method `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// The solver actually run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Linear,
    Quadratic,
    Cardano,
    FerrariCirculant,
    FerrariClassical,
    Euler,
    Oracle,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Linear => "linear",
            Route::Quadratic => "quadratic",
            Route::Cardano => "cardano",
            Route::FerrariCirculant => "ferrari-circulant",
            Route::FerrariClassical => "ferrari-classical",
            Route::Euler => "euler",
            Route::Oracle => "oracle",
        }
    }

    fn depresses(self) -> bool {
        matches!(
            self,
            Route::Cardano | Route::FerrariCirculant | Route::FerrariClassical | Route::Euler
        )
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("constant polynomial: nothing to solve (degree must be at least 1)")]
    Constant,

    #[error(
        "no algebraic solution path for degree {degree}: method {method} covers degrees up to 4, \
         and equations of degree 5 and higher have no general solution in radicals; \
         use --method oracle or --method auto"
    )]
    NoAlgebraicPath { degree: usize, method: Method },

    #[error("method {method} does not apply to degree {degree}")]
    MethodDegree { method: Method, degree: usize },

    #[error(transparent)]
    Core(#[from] Error),
}

impl SolveError {
    /// Whether the failure is attributable to the request rather than the
    /// solver.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, SolveError::Core(_))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveRequest {
    pub polynomial: Polynomial,
    pub method: Method,
    pub verify: bool,
    pub tolerance: Tolerance,
}

impl SolveRequest {
    pub fn new(polynomial: Polynomial) -> Self {
        Self {
            polynomial,
            method: Method::Auto,
            verify: false,
            tolerance: Tolerance::default(),
        }
    }
}

/// One verification check: `pass` iff `value ≤ threshold`.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub value: f64,
    pub threshold: f64,
}

impl Check {
    fn new(name: &'static str, value: f64, threshold: f64) -> Self {
        Self {
            name,
            pass: value <= threshold,
            value,
            threshold,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub polynomial: Polynomial,
    /// Roots of the input polynomial, residuals measured against it.
    pub roots: RootSet,
    pub route: Route,
    /// `x = y − shift` took the input to its depressed form.
    pub shift: Complex,
    /// Circulant coefficients `(0, α, β)` or `(0, α, γ, β)` of the depressed
    /// roots, for cubic and quartic routes.
    pub superposition: Option<Vec<Complex>>,
    pub checks: Vec<Check>,
    /// Wall time of the solve itself, excluding verification.
    pub time_ns: u64,
}

impl SolveReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Thresholds of the verification checks, relative to the scale noted.
pub mod thresholds {
    /// Residual, per unit of [`radical_core::Polynomial::residual_scale`].
    pub const RESIDUAL: f64 = 1e-7;
    /// Oracle match floor, per unit of root scale.
    pub const ORACLE_MATCH: f64 = 1e-6;
    pub const ROOT_SUM: f64 = 1e-9;
    pub const CIRCULANT_STRUCTURE: f64 = 1e-9;
    pub const ROUND_TRIP: f64 = 1e-10;
    pub const MATRIX_EQUATION: f64 = 1e-8;
    pub const CARDANO_COUPLING: f64 = 1e-9;
    pub const CONSTRAINT_SYSTEM: f64 = 1e-8;
    pub const EULER_SIGN_PRODUCT: f64 = 1e-8;
}

/// Route-specific quantities kept for verification.
#[derive(Clone, Copy)]
enum Native {
    None,
    Cubic { p: Complex, q: Complex, coeffs: CubicCoeffs },
    Quartic { p: Complex, q: Complex, r: Complex, coeffs: Option<QuarticCoeffs> },
}

struct Solved {
    /// Roots of the depressed form (same as the final roots when not depressed).
    depressed: RootSet,
    depressed_poly: Polynomial,
    shift: Complex,
    superposition: Option<Vec<Complex>>,
    native: Native,
    converged: Option<bool>,
}

pub fn run_solve(req: &SolveRequest) -> Result<SolveReport, SolveError> {
    let poly = &req.polynomial;
    let route = req.method.route(poly.degree())?;
    let start = Instant::now();
    let solved = solve_route(route, poly, &req.tolerance)?;
    let time_ns = start.elapsed().as_nanos().min(u64::MAX as u128) as u64;

    let roots = solved.depressed.clone().shifted(solved.shift).remeasured(poly);
    let mut checks = Vec::new();
    if let Some(converged) = solved.converged {
        checks.push(Check::new("converged", if converged { 0.0 } else { 1.0 }, 0.0));
    }
    if req.verify {
        verify(route, poly, &roots, &solved, &req.tolerance, &mut checks);
    }
    Ok(SolveReport {
        polynomial: poly.clone(),
        roots,
        route,
        shift: solved.shift,
        superposition: solved.superposition,
        checks,
        time_ns,
    })
}

fn solve_route(route: Route, poly: &Polynomial, tol: &Tolerance) -> Result<Solved, SolveError> {
    let plain = |roots: RootSet, converged| Solved {
        depressed: roots,
        depressed_poly: poly.clone(),
        shift: ZERO,
        superposition: None,
        native: Native::None,
        converged,
    };
    let solved = match route {
        Route::Linear => plain(solve_linear(poly.coeff(1), poly.coeff(0))?, None),
        Route::Quadratic => {
            let m = poly.monic()?;
            plain(solve_quadratic(m.coeff(1), m.coeff(0)), None)
        }
        Route::Oracle => match solve_numeric(poly, DEFAULT_MAX_ITER, tol) {
            Ok(roots) => plain(roots, Some(true)),
            Err(Error::Convergence { best, .. }) => plain(best, Some(false)),
            Err(e) => return Err(e.into()),
        },
        Route::Cardano => {
            let d = depress_cubic(poly)?;
            let coeffs = cardano_coeffs(d.p, d.q);
            let depressed_poly = d.polynomial();
            Solved {
                depressed: RootSet::measured(coeffs.roots().to_vec(), &depressed_poly),
                depressed_poly,
                shift: d.shift,
                superposition: Some(coeffs.circulant().to_vec()),
                native: Native::Cubic { p: d.p, q: d.q, coeffs },
                converged: None,
            }
        }
        Route::FerrariCirculant | Route::FerrariClassical | Route::Euler => {
            let d = depress_quartic(poly)?;
            let (p, q, r) = (d.p, d.q, d.r);
            let (depressed, coeffs) = match route {
                Route::FerrariCirculant => {
                    let (coeffs, roots) = circulant_solution(p, q, r, tol);
                    (roots, Some(coeffs))
                }
                Route::FerrariClassical => (solve_depressed_quartic_classical(p, q, r, tol), None),
                _ => (solve_depressed_quartic_euler(p, q, r, tol)?, None),
            };
            // the classical paths carry no amplitudes of their own; project
            // their roots onto the circulant basis instead
            let superposition = match coeffs {
                Some(c) => Some(c.circulant().to_vec()),
                None => extract_circulant_coeffs(depressed.roots()).ok(),
            };
            Solved {
                depressed,
                depressed_poly: d.polynomial(),
                shift: d.shift,
                superposition,
                native: Native::Quartic { p, q, r, coeffs },
                converged: None,
            }
        }
    };
    Ok(solved)
}

fn root_scale(roots: &[Complex]) -> f64 {
    roots.iter().map(|z| z.norm()).fold(1.0, f64::max)
}

/// Oracle agreement bound for each root: a root of multiplicity `m` is
/// only determined to about `ε^{1/m}`, so clustered roots get a looser bound.
fn oracle_bound(roots: &[Complex]) -> f64 {
    let scale = root_scale(roots);
    let radius = 1e-3 * scale;
    roots
        .iter()
        .map(|a| {
            let m = roots.iter().filter(|b| (*a - **b).norm() <= radius).count();
            (4.0 * f64::EPSILON.powf(1.0 / m as f64)).max(thresholds::ORACLE_MATCH)
        })
        .fold(thresholds::ORACLE_MATCH, f64::max)
}

fn verify(
    route: Route,
    poly: &Polynomial,
    roots: &RootSet,
    solved: &Solved,
    tol: &Tolerance,
    checks: &mut Vec<Check>,
) {
    use thresholds::*;

    let rs = root_scale(roots.roots());
    checks.push(Check::new(
        "residual",
        roots.max_residual() / poly.residual_scale(),
        RESIDUAL,
    ));

    if route != Route::Oracle && roots.len() <= MAX_MATCH_SIZE {
        let value = solve_numeric_best_effort(poly, DEFAULT_MAX_ITER, tol)
            .and_then(|oracle| match_rootsets(roots.roots(), oracle.roots()))
            .map_or(f64::INFINITY, |m| m.max_distance / rs);
        checks.push(Check::new("oracle_match", value, oracle_bound(roots.roots())));
    }

    // Vieta: the roots sum to −c_{n−1}/c_n
    let n = poly.degree();
    let expected_sum = -poly.coeff(n - 1) / poly.leading();
    checks.push(Check::new("root_sum", (roots.sum() - expected_sum).norm() / rs, ROOT_SUM));

    if !route.depresses() {
        return;
    }
    let depressed = solved.depressed.roots();
    let ds = root_scale(depressed);
    match conjugated_root_matrix(depressed) {
        Ok(m) => {
            let structure = m.circulant_deviation().max(m[(0, 0)].norm());
            checks.push(Check::new("circulant_structure", structure / ds, CIRCULANT_STRUCTURE));
            let eq = matrix_equation_residual(&m, &solved.depressed_poly) / solved.depressed_poly.residual_scale();
            checks.push(Check::new("matrix_equation", eq, MATRIX_EQUATION));
        }
        Err(_) => checks.push(Check::new("circulant_structure", f64::INFINITY, CIRCULANT_STRUCTURE)),
    }
    let round_trip = extract_circulant_coeffs(depressed)
        .and_then(|c| reconstruct_roots(&c))
        .map_or(f64::INFINITY, |back| {
            back.iter().zip(depressed).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) / ds
        });
    checks.push(Check::new("round_trip", round_trip, ROUND_TRIP));

    match (route, solved.native) {
        (_, Native::Cubic { p, q, coeffs }) => {
            let (cube, product) = coeffs.coupling_residuals(p, q);
            let cube_scale = 1f64.max(p.norm()).max(q.norm()).powf(1.5).max(q.norm());
            let value = (cube / cube_scale).max(product / 1f64.max(p.norm()));
            checks.push(Check::new("cardano_coupling", value, CARDANO_COUPLING));
        }
        (_, Native::Quartic { p, q, r, coeffs: Some(coeffs) }) => {
            let scale = solved.depressed_poly.residual_scale();
            let worst = coeffs.system_residuals(p, q, r).into_iter().fold(0.0, f64::max);
            checks.push(Check::new("constraint_system", worst / scale, CONSTRAINT_SYSTEM));
        }
        (Route::Euler, Native::Quartic { p, q, r, .. }) => {
            let (_, mismatch) = euler_square_roots(p, q, r);
            let scale = solved.depressed_poly.root_scale().powi(3);
            checks.push(Check::new("euler_sign_product", mismatch / scale, EULER_SIGN_PRODUCT));
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn request(text: &str, method: Method, verify: bool) -> SolveRequest {
        SolveRequest {
            method,
            verify,
            ..SolveRequest::new(parse_polynomial(text).unwrap())
        }
    }

    fn sorted_real(roots: &[Complex]) -> Vec<f64> {
        let mut v: Vec<f64> = roots.iter().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn auto_routing_by_degree() {
        let routes: Vec<_> = (1..=7).map(|d| Method::Auto.route(d).unwrap()).collect();
        assert_eq!(
            routes,
            [
                Route::Linear,
                Route::Quadratic,
                Route::Cardano,
                Route::FerrariCirculant,
                Route::Oracle,
                Route::Oracle,
                Route::Oracle
            ]
        );
        assert_eq!(Method::Auto.route(0), Err(SolveError::Constant));
        assert_eq!(Method::Oracle.route(2), Ok(Route::Oracle));
        assert_eq!(
            Method::Euler.route(3),
            Err(SolveError::MethodDegree {
                method: Method::Euler,
                degree: 3
            })
        );
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>(), Ok(m));
        }
        assert!("newton".parse::<Method>().is_err());
    }

    #[test]
    fn triple_root_with_shift() {
        let report = run_solve(&request("x^3+3x^2+3x+1", Method::Auto, true)).unwrap();
        assert_eq!(report.route, Route::Cardano);
        assert_eq!(report.shift, Complex::new(1.0, 0.0));
        for z in report.roots.roots() {
            assert!((z + 1.0).norm() < 1e-12, "{z}");
        }
        assert!(report.passed(), "{:?}", report.checks);
    }

    #[test]
    fn quartic_example_passes_every_check() {
        let report = run_solve(&request("x^4-7x^2+6x", Method::Auto, true)).unwrap();
        assert_eq!(report.route, Route::FerrariCirculant);
        let got = sorted_real(report.roots.roots());
        for (g, w) in got.iter().zip([-3.0, 0.0, 1.0, 2.0]) {
            assert!((g - w).abs() < 1e-12, "{got:?}");
        }
        let names: Vec<_> = report.checks.iter().map(|c| c.name).collect();
        assert_eq!(
            names,
            [
                "residual",
                "oracle_match",
                "root_sum",
                "circulant_structure",
                "matrix_equation",
                "round_trip",
                "constraint_system"
            ]
        );
        assert!(report.passed(), "{:?}", report.checks);
        assert_eq!(report.superposition.as_ref().map(Vec::len), Some(4));
    }

    #[test]
    fn every_quartic_method_verifies() {
        for method in [Method::FerrariCirculant, Method::FerrariClassical, Method::Euler, Method::Oracle] {
            let report = run_solve(&request("x^4 + 2x^3 - 3x + (1+2i)", method, true)).unwrap();
            assert!(report.passed(), "{method}: {:?}", report.checks);
        }
    }

    #[test]
    fn low_degree_and_oracle_routes() {
        let r = run_solve(&request("2x - 4", Method::Auto, true)).unwrap();
        assert_eq!(r.roots.roots(), &[Complex::new(2.0, 0.0)]);
        assert!(r.passed());

        let r = run_solve(&request("3x^2 - 3", Method::Auto, true)).unwrap();
        assert_eq!(sorted_real(r.roots.roots()), [-1.0, 1.0]);
        assert!(r.passed());

        let r = run_solve(&request("x^5 - 1", Method::Auto, true)).unwrap();
        assert_eq!(r.route, Route::Oracle);
        assert_eq!(r.checks[0].name, "converged");
        assert!(r.passed(), "{:?}", r.checks);
    }

    #[test]
    fn closed_form_refuses_degree_five() {
        let err = run_solve(&request("x^5-1", Method::Cardano, false)).unwrap_err();
        assert!(err.to_string().starts_with("no algebraic solution path for degree 5"));
        assert!(err.is_user_error());
        assert_eq!(
            run_solve(&request("7", Method::Auto, false)).unwrap_err(),
            SolveError::Constant
        );
    }

    #[test]
    fn repeated_quartic_roots_verify() {
        // (x² − 1)²
        let report = run_solve(&request("x^4 - 2x^2 + 1", Method::Auto, true)).unwrap();
        assert_eq!(sorted_real(report.roots.roots()), [-1.0, -1.0, 1.0, 1.0]);
        assert!(report.passed(), "{:?}", report.checks);
    }
}
