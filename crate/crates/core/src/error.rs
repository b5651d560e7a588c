use thiserror::Error;

/// Errors produced by the combinatorial routines.
///
/// `Domain` covers inputs that violate an operation's precondition and
/// `Integrity` covers internal invariants that failed to hold; the latter
/// always indicates either a bug or a counterexample worth reporting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a string: {0}")]
    NotAString(String),
    #[error("integrity violation: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn integrity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Integrity(msg.into()))
}
