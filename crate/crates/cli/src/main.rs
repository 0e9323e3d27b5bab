use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use radical_core::Tolerance;
use radical_solve::bench::{self, BenchSpec};
use radical_solve::report::{self, JsonError};
use radical_solve::{matrices, parse_polynomial, run_solve, Method, SolveRequest};

/// Closed-form roots of polynomials up to degree four, by circulant
/// superposition, with classical cross-checks and an iterative oracle.
#[derive(Parser, Debug)]
#[command(name = "radical-solve", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Absolute tolerance for negligibility tests and oracle convergence.
    #[arg(long, env = "RADICAL_SOLVE_TOL_ABS", default_value_t = Tolerance::DEFAULT_ABS, global = true)]
    tolerance_abs: f64,

    /// Relative tolerance for negligibility tests and oracle convergence.
    #[arg(long, env = "RADICAL_SOLVE_TOL_REL", default_value_t = Tolerance::DEFAULT_REL, global = true)]
    tolerance_rel: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one polynomial, or one per line of standard input.
    Solve {
        /// Expression in x ("x^4 - 7x^2 + 6x") or constant-first
        /// coefficients ("0,6,-7,0,1").
        #[arg(required_unless_present = "stdin", conflicts_with = "stdin")]
        polynomial: Option<String>,

        /// Read polynomials from standard input, one per line.
        #[arg(long)]
        stdin: bool,

        /// Solution method; auto routes by degree.
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,

        /// Run the verification checks and report each one.
        #[arg(long)]
        verify: bool,
    },
    /// Time every applicable method on seeded random polynomials.
    Bench {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Print the shift powers, the clock matrix and W for one size.
    Matrix {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

const OK: u8 = 0;
const USER_ERROR: u8 = 1;
const VERIFICATION_FAILURE: u8 = 2;

struct Outcome {
    text: String,
    code: u8,
    error: bool,
}

fn solve_one(input: &str, method: Method, verify: bool, tolerance: Tolerance, format: Format, batch: bool) -> Outcome {
    let failure = |message: String, code| {
        let text = match format {
            Format::Json => serde_json::to_string(&JsonError {
                input: input.to_string(),
                error: message,
            })
            .expect("error serializes"),
            Format::Text => format!("error: {message}"),
        };
        Outcome { text, code, error: true }
    };
    let polynomial = match parse_polynomial(input) {
        Ok(p) => p,
        Err(e) => return failure(e.to_string(), USER_ERROR),
    };
    let req = SolveRequest {
        polynomial,
        method,
        verify,
        tolerance,
    };
    match run_solve(&req) {
        Ok(r) => {
            let text = match (format, batch) {
                (Format::Json, true) => report::to_json_line(&r),
                (Format::Json, false) => report::to_json(&r),
                (Format::Text, _) => report::to_text(&r),
            };
            let code = if r.passed() { OK } else { VERIFICATION_FAILURE };
            Outcome { text, code, error: false }
        }
        Err(e) => {
            let code = if e.is_user_error() { USER_ERROR } else { VERIFICATION_FAILURE };
            failure(e.to_string(), code)
        }
    }
}

fn emit(outcome: &Outcome, format: Format) {
    // JSON keeps errors on stdout so batch output stays line-aligned with
    // its input
    if outcome.error && format == Format::Text {
        eprintln!("{}", outcome.text);
    } else {
        let _ = writeln!(io::stdout().lock(), "{}", outcome.text.trim_end());
    }
}

fn run(cli: Cli) -> u8 {
    let tolerance = match Tolerance::new(cli.tolerance_abs, cli.tolerance_rel) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return USER_ERROR;
        }
    };
    match cli.command {
        Command::Solve {
            polynomial,
            stdin,
            method,
            verify,
        } => {
            if !stdin {
                let input = polynomial.expect("clap enforces an argument");
                let outcome = solve_one(&input, method, verify, tolerance, cli.format, false);
                emit(&outcome, cli.format);
                return outcome.code;
            }
            let lines: Vec<String> = match io::stdin().lock().lines().collect() {
                Ok(lines) => lines,
                Err(e) => {
                    eprintln!("error: reading standard input: {e}");
                    return USER_ERROR;
                }
            };
            let inputs: Vec<&str> = lines.iter().map(|l| l.trim()).filter(|l| !l.is_empty()).collect();
            let outcomes: Vec<Outcome> = inputs
                .par_iter()
                .map(|line| solve_one(line, method, verify, tolerance, cli.format, true))
                .collect();
            for (input, outcome) in inputs.iter().zip(&outcomes) {
                if cli.format == Format::Text {
                    println!("--- {input}");
                    println!("{}", outcome.text.trim_end());
                } else {
                    emit(outcome, cli.format);
                }
            }
            outcomes.iter().map(|o| o.code).max().unwrap_or(OK)
        }
        Command::Bench { count, degree, seed } => {
            let spec = BenchSpec { count, degree, seed };
            match bench::run_bench(&spec, &tolerance) {
                Ok(report) => {
                    match cli.format {
                        Format::Text => print!("{}", bench::to_text(&report)),
                        Format::Json => println!("{}", bench::to_json(&report)),
                    }
                    if report.consistent() {
                        OK
                    } else {
                        VERIFICATION_FAILURE
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    USER_ERROR
                }
            }
        }
        Command::Matrix { n } => match matrices::matrix_set(n) {
            Ok(set) => {
                match cli.format {
                    Format::Text => println!("{}", matrices::to_text(&set).trim_end()),
                    Format::Json => println!("{}", matrices::to_json(&set)),
                }
                OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                USER_ERROR
            }
        },
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => ExitCode::from(run(cli)),
        Err(e) => {
            let code = if e.use_stderr() { USER_ERROR } else { OK };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}
