use thiserror::Error;

use crate::complex::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed cwx or facet input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Incidence data that cannot form a complex (shape, index range, ∂∂ ≠ 0).
    #[error("invalid complex: {0}")]
    Invalid(ValidationReport),

    /// Exact search would exceed the configured enumeration budget.
    #[error("search budget exceeded: {0}")]
    Budget(String),

    /// The operation is undefined for this input (empty restriction, wrong dimension, ...).
    #[error("inapplicable: {0}")]
    Inapplicable(String),

    /// Bad argument such as a dimension or cell index out of range.
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("eigensolver: {0}")]
    Eigen(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn inapplicable(msg: impl Into<String>) -> Self {
        Error::Inapplicable(msg.into())
    }
}
