use thiserror::Error;

use crate::ring::RingSpec;

/// Error raised by the parser, with the byte offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingSpec, right: RingSpec },
    #[error("index ({row},{col}) out of range for n = {n}")]
    IndexOutOfRange { row: usize, col: usize, n: usize },
    #[error("invalid matrix size n = {0}")]
    InvalidSize(usize),
    #[error("operation requires a {expected} ring, got {got}")]
    WrongFlavor { expected: &'static str, got: RingSpec },
    #[error("operation requires the {expected} layout, got {got}")]
    WrongLayout { expected: &'static str, got: RingSpec },
    #[error("polynomial is not a linear form")]
    NotLinear,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("{0} is not a partition of {1}")]
    BadPartition(String, usize),
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("subspace is not stable under the symmetric group action")]
    NotStable,
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
