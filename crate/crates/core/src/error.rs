use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("index {index} out of bounds for {len} variables")]
    IndexOutOfBounds { index: usize, len: usize },
    #[error("ragged matrix: row {row} has length {len}, expected {expected}")]
    RaggedMatrix {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("observable is not quantizable: a repeated coordinate bracket survives")]
    NotQuantizable,
    #[error("matrix is not anti-hermitian")]
    NotAntiHermitian,
    #[error("invalid dual pair: {0}")]
    InvalidPair(String),
    #[error("stratum {s_prime} out of range 0..={rank}")]
    StratumOutOfRange { s_prime: usize, rank: usize },
    #[error("stratum {upper} does not restrict onto stratum {lower}")]
    BadRestriction { upper: usize, lower: usize },
    #[error("invalid coordinate index {index} for a {dim}-dimensional model")]
    InvalidCoordinate { index: usize, dim: usize },
    #[error("weight {0:?} is not dominant (weakly decreasing, nonnegative)")]
    NonDominantWeight(Vec<i64>),
    #[error("delta exponent vector of length {len} exceeds the rank bound {bound}")]
    DeltaTooLong { len: usize, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(
        "graded dimension methods disagree for stratum {s_prime}, degree {degree}: \
         ideal-rank {ideal} vs evaluation {eval}"
    )]
    MethodDisagreement {
        s_prime: usize,
        degree: usize,
        ideal: u64,
        eval: u64,
    },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
