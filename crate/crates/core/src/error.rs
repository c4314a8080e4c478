use thiserror::Error;

/// Errors raised by the group engine and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A family parameter outside its allowed range.
    #[error("invalid parameter for {family}: ell = {ell}, allowed {allowed}")]
    Parameter {
        family: String,
        ell: u32,
        allowed: String,
    },

    /// An exhaustive operation was asked to run beyond its gate.
    #[error("{operation} is limited to {limit}")]
    Scale {
        operation: &'static str,
        limit: String,
    },

    #[error("malformed element: {0}")]
    MalformedElement(String),

    #[error("tuple kind mismatch: {0}")]
    KindMismatch(String),

    #[error("not an automorphism: {0}")]
    InvalidAutomorphism(String),

    /// An internal consistency check failed. Seeing this means a bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("zero input")]
    ZeroInput,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
