//! End-to-end behaviour of the compiled binary.

mod common;

use common::*;
use radical_core::{Complex, Polynomial};
use radical_solve::report::JsonReport;
use serde_json::Value;

#[test]
fn golden_quartic_report() {
    golden_solve_quartic().unwrap();
}

#[test]
fn golden_matrix_text() {
    golden_matrix_n4().unwrap();
}

#[test]
fn golden_degree_five_refusal() {
    golden_degree5_refusal().unwrap();
}

#[test]
fn json_roots_reevaluate_to_reported_residuals() {
    for input in ["x^3 - 6x + 4", "x^4 + (1-2i)x^3 + 3x - 7", "2x^2 + 3x + 5", "x^6 - 3x + 1"] {
        let out = run(&["solve", input, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{input}");
        let report: JsonReport = serde_json::from_str(&stdout(&out)).unwrap();
        let coeffs: Vec<Complex> = report.polynomial.iter().map(|&c| c.into()).collect();
        let poly = Polynomial::new(coeffs).unwrap();
        assert_eq!(report.roots.len(), poly.degree());
        for root in &report.roots {
            let again = poly.eval(Complex::new(root.re, root.im)).norm();
            assert!((again - root.residual).abs() <= 1e-12, "{input}: {again} vs {}", root.residual);
        }
    }
}

#[test]
fn auto_never_picks_closed_form_above_degree_four() {
    for input in ["x^5 - 1", "x^7 + 2x - 1", "1,2,3,4,5,6"] {
        let out = run(&["solve", input, "--format", "json"]);
        let report: JsonReport = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report.method, "oracle", "{input}");
    }
}

#[test]
fn batch_output_follows_input_order() {
    let inputs: Vec<String> = (1..=40).map(|k| format!("x^2 - {}", k * k)).collect();
    let mut text = inputs.join("\n");
    text.push_str("\n\nx^3 +\n");
    let out = run_with_input(&["solve", "--stdin", "--format", "json"], Some(&text));
    assert_eq!(out.status.code(), Some(1), "the malformed line is a user error");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 41);
    for (k, line) in lines[..40].iter().enumerate() {
        let report: JsonReport = serde_json::from_str(line).unwrap();
        let big = report.roots.iter().map(|r| r.re.abs()).fold(0.0, f64::max);
        assert!((big - (k + 1) as f64).abs() < 1e-12, "line {k}: {line}");
    }
    let last: Value = serde_json::from_str(lines[40]).unwrap();
    assert_eq!(last["input"], "x^3 +");
    assert!(last["error"].as_str().unwrap().contains("position 5"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["solve", "x^2 +* 1"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "5"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "x^3-1", "--method", "euler"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "x^2-1", "--method", "newton"]).status.code(), Some(1));
    assert_eq!(run(&["matrix", "--n", "1"]).status.code(), Some(1));
    assert_eq!(run(&["bench", "--degree", "5"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "x^2-1", "--tolerance-abs", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "x^3-1", "--verify"]).status.code(), Some(0));
    // a triple root stalls the oracle: reported as a failed check, not a crash
    let out = run(&["solve", "(x+1)^3", "--method", "oracle", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let report: JsonReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.checks[0].name, "converged");
    assert!(!report.checks[0].pass);
}

#[test]
fn tolerance_environment_overrides() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_radical-solve"))
        .args(["solve", "x^2-1"])
        .env("RADICAL_SOLVE_TOL_ABS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_radical-solve"))
        .args(["solve", "x^4 - 2x^2 + 1", "--verify"])
        .env("RADICAL_SOLVE_TOL_ABS", "1e-8")
        .env("RADICAL_SOLVE_TOL_REL", "1e-8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn text_output_and_matrix_json() {
    let out = run(&["solve", "x^3 + 3x^2 + 3x + 1", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("method: cardano\nshift:  1\n"), "{text}");
    assert!(!text.contains("FAIL"));

    let out = run(&["matrix", "--n", "3", "--format", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 3);
    let w00 = doc["w"][0][0]["re"].as_f64().unwrap();
    assert!((w00 - 1.0 / 3f64.sqrt()).abs() < 1e-15);
}
