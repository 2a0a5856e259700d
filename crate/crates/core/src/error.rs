use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring size mismatch: {0} vs {1} variables")]
    RingMismatch(usize, usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("rank parameter N must be at least 2, got {0}")]
    InvalidRank(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {parts:?} has {len} rows, but A_{} admits at most {n}", .n - 1)]
    TooManyRows { parts: Vec<u32>, len: usize, n: usize },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("x_{q} is an independent indeterminate for N = {n}; degeneration starts at Q = N")]
    NotDegenerate { q: u32, n: usize },

    #[error("content {content:?} does not match shape {shape:?}")]
    ContentMismatch { shape: Vec<u32>, content: Vec<u32> },

    #[error("inconsistent multiplicity system: {0}")]
    InconsistentSystem(String),
}

impl Error {
    /// Errors that indicate a broken algebraic invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InexactDivision(_) | Error::InconsistentSystem(_) | Error::DivisionByZero)
    }
}
