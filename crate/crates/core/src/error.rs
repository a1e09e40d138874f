use thiserror::Error;

/// Errors raised by the enumeration engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `token` is the offending piece of input.
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// An argument outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation was called on a value that does not satisfy its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Series with different truncation degrees were combined.
    #[error("degree bound mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// A configured resource cap was exceeded.
    #[error("limit exceeded: {0}")]
    Limit(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(token: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.into(),
        reason: reason.into(),
    }
}
