use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar mode mismatch: {0} vs {1}")]
    ModeMismatch(&'static str, &'static str),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("matrix is not irreducible")]
    NotIrreducible,
    #[error("not a Perron similarity")]
    NotPerron,
    #[error("invalid Perron witness (index {index}, sign {sign})")]
    InvalidWitness { index: usize, sign: i8 },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
