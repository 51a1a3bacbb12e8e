//! Command-line arguments and their validation into a request.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use suzuki_core::affine::{LevelForm, OpSpec};
use suzuki_core::Scalar;

use crate::parse::Context;
use crate::report::Format;

pub const MAX_RANK: usize = 3;
pub const MAX_TRUNC: i64 = 6;
pub const MAX_CAP: u32 = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UsageError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("{0}")]
    Invalid(String),
}

/// A numeric parameter value or the symbolic indeterminate.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Sym,
    Value(Scalar),
}

impl FromStr for ParamValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "sym" {
            return Ok(ParamValue::Sym);
        }
        s.parse::<Scalar>().map(ParamValue::Value).map_err(|e| e.to_string())
    }
}

impl ParamValue {
    fn scalar(&self) -> Option<Scalar> {
        match self {
            ParamValue::Sym => None,
            ParamValue::Value(v) => Some(v.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ContextKind {
    Cherednik,
    Affine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Critical,
    Generic,
    Family,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "suzuki", version, about = "Cherednik algebras, critical-level affine gl_n and the Suzuki centre map")]
pub struct Args {
    /// Rank of gl_n.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of points of S_m.
    #[arg(long)]
    pub m: Option<usize>,
    /// Truncation depth for affine products and operator coefficients.
    #[arg(long)]
    pub trunc: Option<i64>,
    /// Value of t: a rational or "sym".
    #[arg(long)]
    pub t: Option<ParamValue>,
    /// Value of c: a rational or "sym".
    #[arg(long)]
    pub c: Option<ParamValue>,
    /// Degree cap for PBW, Dunkl and estimate enumerations.
    #[arg(long = "degree-cap")]
    pub degree_cap: Option<u32>,
    /// Emit JSON instead of a text table.
    #[arg(long)]
    pub json: bool,
    /// Verification suite to run.
    #[arg(long)]
    pub suite: Option<String>,
    /// Expression to parse and print in normal form.
    #[arg(long)]
    pub expr: Option<String>,
    /// Algebra in which --expr is evaluated.
    #[arg(long, value_enum, default_value = "cherednik")]
    pub context: ContextKind,
    /// Invariant form for the affine context.
    #[arg(long, value_enum, default_value = "critical")]
    pub level: Level,
    /// Print the image of an operator such as T(2,-2), id[-1] or L[0].
    #[arg(long)]
    pub theta: Option<String>,
    /// Stored report to compare against.
    #[arg(long)]
    pub golden: Option<PathBuf>,
}

pub const SUITES: [&str; 9] = [
    "pbw",
    "dunkl",
    "specht",
    "affine-centrality",
    "appendix",
    "main-theorem",
    "verma-weyl",
    "poisson",
    "regular-module",
];

#[derive(Clone, Debug, PartialEq)]
pub enum Action {
    Suite(String),
    Expr { src: String, context: Context },
    Theta(OpSpec),
}

/// Validated request with defaults filled in.
#[derive(Clone, Debug, PartialEq)]
pub struct Request {
    pub action: Action,
    pub n: usize,
    pub m: usize,
    pub trunc: Option<i64>,
    pub t: ParamValue,
    pub c: ParamValue,
    pub degree_cap: Option<u32>,
    pub format: Format,
    pub golden: Option<PathBuf>,
}

fn rank_of(args: &Args, needs_equal: bool) -> Result<(usize, usize), UsageError> {
    let (n, m) = match (args.n, args.m) {
        (Some(n), Some(m)) => (n, m),
        (Some(n), None) => (n, n),
        (None, Some(m)) => (m, m),
        (None, None) => (2, 2),
    };
    if needs_equal && n != m {
        return Err(UsageError::UnsupportedSize(format!("n = {n} and m = {m} must agree")));
    }
    for (name, v) in [("n", n), ("m", m)] {
        if v == 0 || v > MAX_RANK {
            return Err(UsageError::UnsupportedSize(format!("{name} = {v} outside 1..={MAX_RANK}")));
        }
    }
    Ok((n, m))
}

impl Request {
    pub fn from_args(args: &Args) -> Result<Request, UsageError> {
        let chosen = [args.suite.is_some(), args.expr.is_some(), args.theta.is_some()];
        if chosen.iter().filter(|&&b| b).count() != 1 {
            return Err(UsageError::Invalid("give exactly one of --suite, --expr, --theta".into()));
        }
        if let Some(d) = args.trunc {
            if !(0..=MAX_TRUNC).contains(&d) {
                return Err(UsageError::UnsupportedSize(format!("trunc = {d} outside 0..={MAX_TRUNC}")));
            }
        }
        if let Some(d) = args.degree_cap {
            if d > MAX_CAP {
                return Err(UsageError::UnsupportedSize(format!("degree cap {d} above {MAX_CAP}")));
            }
        }
        let needs_equal = match &args.suite {
            Some(s) => matches!(s.as_str(), "main-theorem" | "poisson" | "regular-module" | "verma-weyl"),
            None => args.theta.is_some(),
        };
        let (n, m) = rank_of(args, needs_equal)?;
        let t = args.t.clone().unwrap_or(ParamValue::Sym);
        let c = args.c.clone().unwrap_or(ParamValue::Sym);
        let action = if let Some(s) = &args.suite {
            if !SUITES.contains(&s.as_str()) {
                return Err(UsageError::UnknownSuite(s.clone()));
            }
            Action::Suite(s.clone())
        } else if let Some(src) = &args.expr {
            let context = match args.context {
                ContextKind::Cherednik => Context::Cherednik { m, t: t.scalar(), c: c.scalar() },
                ContextKind::Affine => {
                    let form = match args.level {
                        Level::Critical => LevelForm::Critical,
                        Level::Generic => LevelForm::generic_symbolic(),
                        Level::Family => LevelForm::Family,
                    };
                    Context::Affine { n, form, trunc: args.trunc }
                }
            };
            Action::Expr { src: src.clone(), context }
        } else {
            let src = args.theta.as_deref().unwrap_or_default();
            let op: OpSpec = src.parse().map_err(|e: suzuki_core::AlgebraError| UsageError::Invalid(e.to_string()))?;
            if let OpSpec::T(k, _) = op {
                if k == 0 || k > n {
                    return Err(UsageError::UnsupportedSize(format!("T({k},..) needs 1 <= k <= n = {n}")));
                }
            }
            Action::Theta(op)
        };
        Ok(Request {
            action,
            n,
            m,
            trunc: args.trunc,
            t,
            c,
            degree_cap: args.degree_cap,
            format: if args.json { Format::Json } else { Format::Text },
            golden: args.golden.clone(),
        })
    }
}
