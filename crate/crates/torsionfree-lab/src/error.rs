//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mixed-field operands: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("bad argument: {0}")]
    BadArgument(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable process exit code for the CLI: input/validation problems map to 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
