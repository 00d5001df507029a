//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the geometric and algebraic kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// Shape mismatch or input of the wrong dimension.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Input violates a geometric precondition (degenerate simplex,
    /// lower-dimensional hull, coincident vertices, ...).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A symmetric matrix that is not a Gram matrix (indefinite beyond
    /// tolerance).
    #[error("not a Gram matrix: {0}")]
    NotGram(String),

    /// Configuration outside the supported scope.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Invalid argument values.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
