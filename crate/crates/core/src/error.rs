use thiserror::Error;

/// Errors raised by matrix construction and the kinematics solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("rapidity {eta} exceeds the cap of {cap}")]
    RapidityOverflow { eta: f64, cap: f64 },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("not a rotation matrix (deviation {deviation:e})")]
    NotARotation { deviation: f64 },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidArgument(format!("{name} must be finite, got {value}")))
    }
}
