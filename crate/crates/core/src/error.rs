use thiserror::Error;

/// Errors raised by construction, sampling, operators and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("non-finite value {value} at sample point x = {x}")]
    NonFinite { x: f64, value: f64 },

    #[error("expected {expected} values for the grid, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("operands live on different grids")]
    GridMismatch,

    #[error("invalid window ({i}, {j}) for a grid of {n} cells")]
    InvalidWindow { i: usize, j: usize, n: usize },

    #[error("parameter `{name}` out of range: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("cannot parse function spec `{spec}`: {reason}")]
    BadSpec { spec: String, reason: String },

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
