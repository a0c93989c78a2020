//! Command-line front end for `clifford-grading`.
//!
//! Exit codes: 0 on success, 1 when a verification finds a violation, 2 on
//! usage or parse errors.

pub mod args;
mod commands;
pub mod json;
mod verify;

use std::fmt;

pub use args::Cli;
use args::Command;

/// Text written to standard output and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }

    fn checked(stdout: String, passed: bool) -> Self {
        Outcome {
            stdout,
            code: if passed { 0 } else { 1 },
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(clifford_grading::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<clifford_grading::Error> for CliError {
    fn from(e: clifford_grading::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Eval(a) => commands::eval(&a),
        Command::Classify(a) => commands::classify(&a),
        Command::Grading(a) => commands::grading(&a),
        Command::Sigchange(a) => commands::sigchange(&a),
        Command::Verify(a) => verify::verify(&a),
    }
}
