use thiserror::Error;

/// Errors raised across the crate. Input validation failures map to CLI exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("no solution")]
    NoSolution,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("bicharacter is not a commutation factor")]
    NotCommutationFactor,
    #[error("bicharacter is degenerate")]
    DegenerateBeta,
    #[error("diagonal entry q_{0}{0} equals 1")]
    DiagonalOne(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vertex {0} is not reflectable")]
    NotReflectable(usize),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("twisted braiding matrix is not symmetric")]
    NotSymmetric,
    #[error("action generators do not commute")]
    NonCommutingAction,
    #[error("action is not monomial in the basis: {0}")]
    NonMonomialAction(String),
    #[error("right action is not trivial")]
    RactNotTrivial,
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("no antipode: {0}")]
    NoAntipode(String),
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
