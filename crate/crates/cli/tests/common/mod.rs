#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

pub fn run(args: &[&str]) -> Output {
    run_with_input(args, None)
}

pub fn run_with_input(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_radical-solve"));
    cmd.args(args)
        .env_remove("RADICAL_SOLVE_TOL_ABS")
        .env_remove("RADICAL_SOLVE_TOL_REL")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .expect("piped stdin")
            .write_all(text.as_bytes())
            .expect("stdin accepts input");
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().expect("binary finishes")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

pub fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

/// Structural comparison of two JSON documents with numeric slack
/// `1e-9 · max(1, |expected|)`. Keys in `ignore` are skipped at any depth.
pub fn json_close(got: &Value, want: &Value, ignore: &[&str]) -> Result<(), String> {
    compare(got, want, ignore, "$")
}

fn compare(got: &Value, want: &Value, ignore: &[&str], path: &str) -> Result<(), String> {
    match (got, want) {
        (Value::Number(a), Value::Number(b)) => {
            let (a, b) = (a.as_f64().unwrap(), b.as_f64().unwrap());
            if (a - b).abs() <= 1e-9 * b.abs().max(1.0) {
                Ok(())
            } else {
                Err(format!("{path}: {a} differs from {b}"))
            }
        }
        (Value::Array(a), Value::Array(b)) => {
            if a.len() != b.len() {
                return Err(format!("{path}: length {} vs {}", a.len(), b.len()));
            }
            for (k, (x, y)) in a.iter().zip(b).enumerate() {
                compare(x, y, ignore, &format!("{path}[{k}]"))?;
            }
            Ok(())
        }
        (Value::Object(a), Value::Object(b)) => {
            let keys = |m: &serde_json::Map<String, Value>| {
                let mut k: Vec<String> = m.keys().filter(|k| !ignore.contains(&k.as_str())).cloned().collect();
                k.sort();
                k
            };
            if keys(a) != keys(b) {
                return Err(format!("{path}: keys {:?} vs {:?}", keys(a), keys(b)));
            }
            for k in keys(b) {
                compare(&a[&k], &b[&k], ignore, &format!("{path}.{k}"))?;
            }
            Ok(())
        }
        _ if got == want => Ok(()),
        _ => Err(format!("{path}: {got} vs {want}")),
    }
}

/// The three command-line contract cases; each returns a description of
/// the first mismatch.
pub fn golden_solve_quartic() -> Result<(), String> {
    let out = run(&["solve", "x^4-7x^2+6x", "--format", "json", "--verify"]);
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}: {}", out.status.code(), stderr(&out)));
    }
    let got: Value = serde_json::from_str(&stdout(&out)).map_err(|e| e.to_string())?;
    let want: Value = serde_json::from_str(&golden("solve_quartic_verify.json")).unwrap();
    json_close(&got, &want, &["time_ns"])?;
    let checks = got["checks"].as_array().ok_or("checks missing")?;
    if checks.is_empty() || !checks.iter().all(|c| c["pass"] == Value::Bool(true)) {
        return Err("not every verification check passed".into());
    }
    Ok(())
}

pub fn golden_matrix_n4() -> Result<(), String> {
    let out = run(&["matrix", "--n", "4"]);
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}", out.status.code()));
    }
    let (got, want) = (stdout(&out), golden("matrix_n4.txt"));
    if got != want {
        return Err(format!("output differs:\n{got}"));
    }
    Ok(())
}

pub fn golden_degree5_refusal() -> Result<(), String> {
    let out = run(&["solve", "x^5-1", "--method", "cardano"]);
    if out.status.code() != Some(1) {
        return Err(format!("exit {:?}, expected 1", out.status.code()));
    }
    let (got, want) = (stderr(&out), golden("degree5_cardano.stderr"));
    if got != want {
        return Err(format!("stderr differs: {got}"));
    }
    if !got.contains("no algebraic solution path for degree 5") {
        return Err("routing message missing".into());
    }
    Ok(())
}
