//! Command-line front end for the `hurwitz` crate: the `hw`, `wop` and
//! `verify` tools.
//!
//! Every command writes one JSON document (or CSV for `hw table --format
//! csv`) to stdout. Exit codes: 0 success, 1 a verification check failed,
//! 2 a size cap from the budget was exceeded, 64 bad usage or configuration,
//! 70 an engine error, 74 an I/O error. Errors are JSON on stderr. A
//! `verify components` run that had to skip cycle types still prints its
//! report, with exit code 2.

pub mod budget;
pub mod hw;
pub mod verify;
pub mod wop;

use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use hurwitz::Partition;
use serde_json::json;
use thiserror::Error;

pub use budget::Budget;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("configuration: {0}")]
    Config(String),

    #[error("{parameter} = {value} exceeds the budget cap {cap}")]
    Budget {
        parameter: &'static str,
        value: usize,
        cap: usize,
    },

    #[error(transparent)]
    Engine(#[from] hurwitz::Error),

    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget { .. } | CliError::Engine(hurwitz::Error::BudgetExceeded { .. }) => 2,
            CliError::Usage(_) | CliError::Config(_) => 64,
            CliError::Engine(_) => 70,
            CliError::Io(_) => 74,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            CliError::Budget {
                parameter,
                value,
                cap,
            } => json!({"error": "budget", "parameter": parameter, "value": value, "cap": cap}),
            CliError::Engine(hurwitz::Error::BudgetExceeded { needed, budget }) => json!({
                "error": "budget",
                "parameter": "tuples",
                "value": needed.to_string(),
                "cap": budget.to_string(),
            }),
            CliError::Usage(m) => json!({"error": "usage", "message": m}),
            CliError::Config(m) => json!({"error": "config", "message": m}),
            CliError::Engine(e) => json!({"error": "engine", "message": e.to_string()}),
            CliError::Io(m) => json!({"error": "io", "message": m}),
        }
    }
}

/// Parses comma-separated positive parts in any order, e.g. `1,3` → `(3,1)`.
pub fn parse_partition(text: &str) -> Result<Partition, CliError> {
    text.parse::<Partition>()
        .map_err(|e| CliError::Usage(format!("partition `{text}`: {e}")))
}

/// What a command prints and how the process exits when it succeeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit: u8,
}

impl Output {
    pub fn json<T: serde::Serialize>(value: &T, exit: u8) -> Result<Self, CliError> {
        let text = serde_json::to_string(value).map_err(|e| CliError::Io(e.to_string()))?;
        Ok(Output {
            stdout: text + "\n",
            exit,
        })
    }
}

/// A parsed command line for one of the binaries.
pub trait Tool: Parser {
    fn config(&self) -> Option<&Path>;
    fn execute(self, budget: &Budget) -> Result<Output, CliError>;
}

/// Runs a tool on `args` and returns `(exit code, stdout, stderr)`.
pub fn run<T, I, S>(args: I) -> (u8, String, String)
where
    T: Tool,
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let tool = match T::try_parse_from(args) {
        Ok(t) => t,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (64, String::new(), text)
            } else {
                (0, text, String::new())
            };
        }
    };
    let result = Budget::load(tool.config()).and_then(|b| tool.execute(&b));
    match result {
        Ok(out) => (out.exit, out.stdout, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("{}\n", e.to_json())),
    }
}

/// `main` for a binary: runs on the process arguments and prints.
pub fn main_for<T: Tool>() -> ExitCode {
    let (code, out, err) = run::<T, _, _>(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    ExitCode::from(code)
}

fn positive(name: &str, value: usize) -> Result<(), CliError> {
    if value == 0 {
        return Err(CliError::Usage(format!("--{name} must be positive")));
    }
    Ok(())
}

fn degree(d: usize) -> Result<(), CliError> {
    if d < 2 {
        return Err(CliError::Usage(format!("--d must be at least 2, got {d}")));
    }
    Ok(())
}
