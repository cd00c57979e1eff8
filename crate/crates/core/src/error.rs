use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid domain [{a}, {b}]: left endpoint must be strictly less than right")]
    InvalidDomain { a: f64, b: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite value at index {0}")]
    NonFinite(usize),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("uneven nodes unsupported: trigonometric interpolation requires a uniform grid")]
    UnevenNodes,

    #[error("function unresolved after {points} samples")]
    Unresolved {
        points: usize,
        best: Box<crate::cheb::ChebInterpolant>,
    },

    #[error("Newton iteration did not converge for root {index} of degree {degree}")]
    NoConvergence { degree: usize, index: usize },

    #[error("matrix is numerically singular (sigma_min / sigma_max = {ratio:e})")]
    NumericallySingular { ratio: f64 },

    #[error("duplicate point {0}")]
    DuplicatePoint(f64),

    #[error("search cap reached at n = {0}")]
    SearchCap(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
