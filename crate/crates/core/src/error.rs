use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum FracError {
    #[error("gamma pole at argument {0}")]
    PoleArgument(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence in {what}: {detail}")]
    NonConvergence { what: &'static str, detail: String },
    #[error("tolerance not reached: estimate {achieved:e}, requested {requested:e}")]
    Tolerance { achieved: f64, requested: f64 },
    #[error("singular matrix at pivot {pivot}")]
    Singular { pivot: usize },
    #[error("zero search failed at index {index}")]
    ZeroNotFound { index: usize },
    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),
    #[error("no sign change on [{lo}, {hi}]: D(lo) = {f_lo:e}, D(hi) = {f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("divisor {value:e} at node {index} below threshold")]
    SmallDivisor { index: usize, value: f64 },
    #[error("precondition violated at sample {index}: {what}")]
    Precondition { index: usize, what: String },
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for FracError {
    fn from(e: std::io::Error) -> Self {
        FracError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, FracError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(FracError::Domain(msg.into()))
}
