use thiserror::Error;

use crate::chain::NewtonTrace;

/// Errors produced by the model builders and numerical kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// The configuration document could not be decoded.
    #[error("config schema error: {0}")]
    Schema(String),

    /// A parameter violates one of the model invariants.
    #[error("invalid `{field}`: {reason}")]
    InvalidSpec { field: String, reason: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A pivot fell below the singularity threshold.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// A structured recurrence could not proceed (zero continuant).
    #[error("recurrence breakdown: {0}")]
    Breakdown(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("newton iteration did not converge after {} iterations", .trace.iterations)]
    NotConverged { trace: Box<NewtonTrace> },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::InvalidSpec {
        field: field.into(),
        reason: reason.into(),
    }
}
