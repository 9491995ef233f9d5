use thiserror::Error;

use crate::subset::GroundSubset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field of order {p}^{e} exceeds 256")]
    FieldTooLarge { p: u64, e: u32 },
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("column {col} out of range for a matrix with {cols} columns")]
    ColumnOutOfRange { col: usize, cols: usize },
    #[error("entry {value} is not a valid element of GF({q})")]
    InvalidEntry { value: u64, q: usize },
    #[error("matrix does not have full row rank ({rank} < {rows})")]
    NotFullRowRank { rank: usize, rows: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element {element} outside ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("ground set of size {n} exceeds the enumeration guard {guard}")]
    GroundSetTooLarge { n: usize, guard: usize },
    #[error("rank {r} outside 0..={max}")]
    RankOutOfRange { r: usize, max: usize },
    #[error("elongation by {r} outside 0..={max}")]
    ElongationOutOfRange { r: usize, max: usize },
    #[error("truncation by {r} outside 0..={max}")]
    TruncationOutOfRange { r: usize, max: usize },
    #[error("rank hypothesis violated: {0}")]
    RankHypothesisViolated(String),
    #[error("invalid basis collection: {0}")]
    InvalidBases(String),
    #[error("index {r} outside 1..={max}")]
    ROutOfRange { r: usize, max: usize },
    #[error("sequence is not strictly increasing at position {0}")]
    NotStrictlyIncreasing(usize),
    #[error("sequence must be nonempty with positive terms")]
    InvalidSequence,
    #[error("the ideal is zero: the matroid has no circuits")]
    ZeroIdeal,
    #[error("brute-force search limited to n <= {max_n} and s <= {max_s} (got n = {n}, s = {s})")]
    OracleGuardExceeded { n: usize, s: u64, max_n: usize, max_s: u64 },
    #[error("invalid Steiner system: t-subset {subset} is covered {count} times")]
    InvalidSteiner { subset: GroundSubset, count: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{d} is not divisible by {divisor}")]
    DivisibilityViolated { d: u64, divisor: u64 },
    #[error("degree assignment is not constant")]
    MixedDegreesForEqualDegreeBound,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

impl Error {
    /// True for errors raised by an enumeration or search guard.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GroundSetTooLarge { .. } | Error::OracleGuardExceeded { .. } | Error::TooLarge(_))
    }
}
