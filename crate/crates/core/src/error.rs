//! Error type for the algebra kernels.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree cap {cap} exceeded")]
    CapExceeded { cap: u32 },
    #[error("commutator not divisible by t")]
    NotDivisible,
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("nonzero torus weight")]
    NonzeroWeight,
    #[error("stabilizer of a does not match the composition")]
    StabilizerMismatch,
    #[error("degenerate point: {0}")]
    Degenerate(String),
    #[error("reduction did not terminate within {0} steps")]
    NonTerminating(usize),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
