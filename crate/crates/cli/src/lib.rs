//! Library half of the `radical-solve` command: input parsing, the solve
//! pipeline with its verification checks, the benchmark harness and the
//! output formats.

pub mod bench;
pub mod matrices;
pub mod parse;
pub mod report;
pub mod solve;

pub use parse::{parse_polynomial, ParseError};
pub use solve::{run_solve, Method, Route, SolveError, SolveReport, SolveRequest};
