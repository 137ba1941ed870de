use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Area vector rejected; `index` is the 1-based position of the first violation.
    #[error("invalid area vector at index {index}: {reason}")]
    InvalidArea { index: usize, reason: String },

    /// Two reals sit (numerically) exactly one unit apart.
    #[error("tie between y_{i} and y_{j}: difference is 1 within tolerance")]
    Tie { i: usize, j: usize },

    /// A configured size cap would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Exact arithmetic produced an inconsistency (e.g. a non-exact division).
    #[error("integrity error: {0}")]
    Integrity(String),

    /// Independent computations of the same quantity disagreed.
    #[error("verification failed at lambda={lambda}: {detail}")]
    Verification { lambda: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
