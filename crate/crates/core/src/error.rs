use thiserror::Error;

use crate::groebner::GbStats;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("Gröbner step limit of {limit} exceeded ({stats})")]
    StepLimit { limit: usize, stats: GbStats },
    #[error("variable budget exceeded: {needed} variables needed, budget is {budget}")]
    Budget { needed: u64, budget: u64 },
    #[error("ideal is not monomial: generator `{0}`")]
    NotMonomial(String),
    #[error("codimension check failed after {attempts} attempts (expected {expected}, got {got})")]
    Codimension {
        attempts: usize,
        expected: usize,
        got: i64,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Whether the error reports exhausted resources rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::StepLimit { .. } | Error::Budget { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
