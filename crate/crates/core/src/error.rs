use thiserror::Error;

use crate::balanced::BalanceViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input; positions are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// An operation was called outside its domain (void complex, index out of range, ...).
    #[error("{0}")]
    Domain(String),
    #[error("not a balanced complex: {0}")]
    Balance(BalanceViolation),
    /// Two routes that must agree did not. Always a bug or a counterexample.
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
