use thiserror::Error;

use crate::field::Characteristic;

/// Errors raised by the descent-algebra engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch {
        left: Characteristic,
        right: Characteristic,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspace is not contained in the ambient subspace")]
    NotSubspace,

    #[error("degree {n} exceeds the supported bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("step s = {s} out of range for degree {n}")]
    StepOutOfRange { n: usize, s: usize },

    #[error("the element w needs n >= 3 (got n = {0})")]
    WRequiresDegree3(usize),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("idempotent lifting did not converge within {0} iterations")]
    LiftDidNotConverge(usize),

    #[error("{0} is not a {1}-regular partition")]
    NotRegular(String, Characteristic),

    #[error("the underlying graph has a loop at vertex {0}")]
    LoopInGraph(usize),

    #[error("group algebra oracle: {0}")]
    Oracle(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
