use thiserror::Error;

use crate::exactmath::FieldSpec;

/// Errors raised across the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unsupported field {field}: {reason}")]
    UnsupportedField { field: FieldSpec, reason: String },

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration of {needed} items exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid root system {0}")]
    InvalidRootSystem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
