//! Command-line front end: expression parsing, suite orchestration and reports.

pub mod parse;
pub mod report;
pub mod request;
pub mod suites;

use std::time::Instant;

use thiserror::Error;

use suzuki_core::suzuki::{theta, HModule};
use suzuki_core::AlgebraError;

use crate::parse::{parse_expression, ParseError};
use crate::report::{emit_report, Format, Report};
use crate::request::{Action, Request, UsageError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] UsageError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("golden file {path}: {msg}")]
    Golden { path: String, msg: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Golden { .. } => 2,
            CliError::Algebra(_) => 1,
        }
    }
}

/// Output of one invocation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

fn value_output(label: &str, src: &str, value: &str, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("{value}\n"),
        Format::Json => serde_json::json!({ "input": src, label: value }).to_string() + "\n",
    }
}

/// Build the suite report for `name` with wall-clock timing.
pub fn suite_report(name: &str, req: &Request) -> Result<Report, CliError> {
    let start = Instant::now();
    let (params, checks) = suites::run_suite(name, req)?;
    let mut r = Report::new(Some(name.to_string()), params, &checks);
    r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(r)
}

pub fn execute(req: &Request) -> Result<Outcome, CliError> {
    match &req.action {
        Action::Expr { src, context } => {
            let e = parse_expression(src, context)?;
            Ok(Outcome { stdout: value_output("normal_form", src, &e.to_string(), req.format), stderr: String::new(), code: 0 })
        }
        Action::Theta(op) => {
            let z = theta(&HModule::new(req.n)?, op)?;
            Ok(Outcome { stdout: value_output("theta", &op.to_string(), &z.to_string(), req.format), stderr: String::new(), code: 0 })
        }
        Action::Suite(name) => {
            let r = suite_report(name, req)?;
            let mut stderr = String::new();
            let mut code = r.exit_code();
            if let Some(path) = &req.golden {
                let shown = path.display().to_string();
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Golden { path: shown.clone(), msg: e.to_string() })?;
                let stored: Report = serde_json::from_str(&text)
                    .map_err(|e| CliError::Golden { path: shown.clone(), msg: e.to_string() })?;
                let diff = r.diff(&stored);
                if !diff.is_empty() {
                    stderr = format!("golden mismatch against {shown}:\n{}\n", diff.join("\n"));
                    code = 1;
                }
            }
            Ok(Outcome { stdout: emit_report(&r, req.format), stderr, code })
        }
    }
}
