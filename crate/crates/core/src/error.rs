use thiserror::Error;

use crate::cartan::DatumViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element is not invertible: {0}")]
    NonInvertible(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid quantum number arguments: {0}")]
    QuantumArgs(String),

    #[error("invalid Cartan datum: {}", format_violations(.0))]
    InvalidDatum(Vec<DatumViolation>),

    #[error("unknown datum name `{0}`")]
    UnknownDatum(String),

    #[error("root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {weight} exceeds the bound {bound} ({count} basis words would be produced)")]
    SizeBound {
        weight: usize,
        bound: usize,
        count: String,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("evaluation error: {0}")]
    Eval(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("linear system at block {block}: {message}")]
    LinearSystem { block: String, message: String },

    #[error("io error: {0}")]
    Io(String),
}

fn format_violations(v: &[DatumViolation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
