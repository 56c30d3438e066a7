use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid parameters for `{name}`: {message}")]
    InvalidParams { name: String, message: String },

    #[error("invalid step at position {position}: {message}")]
    InvalidStep { position: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no convergence after {iterations} iterations (max relative residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("sampling failed after {attempts} attempts: {log}")]
    SamplingExhausted { attempts: usize, log: String },

    #[error("point lists are not congruent: |d({i},{j})| differs by {gap:e}")]
    NotCongruent { i: usize, j: usize, gap: f64 },

    #[error("no rigid motion with orientation {orientation}: residual {residual:e}")]
    OrientationMismatch { orientation: i8, residual: f64 },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
