use thiserror::Error;

/// Errors produced by table constructors and operations.
#[derive(Error, Debug)]
pub enum Error {
    /// Input table has the wrong shape or an out-of-range entry.
    #[error("malformed table: {0}")]
    MalformedTable(String),
    /// A semantic validation check failed where the operation requires a
    /// valid table.
    #[error("table failed validation: {0}")]
    InvalidTable(String),
    /// JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// Unknown builtin name or malformed `name:n` spec.
    #[error("unknown builtin: {0}")]
    UnknownBuiltin(String),
    /// The operation needs class p >= 2 (class-1 monoids are free abelian
    /// and have no interesting Garside element).
    #[error("unsupported class {p}: operation requires class >= 2")]
    UnsupportedClass { p: usize },
    /// Exhaustive enumeration refused: the search space n^(n^2) is out of
    /// desk scale.
    #[error("enumeration for n = {n} exceeds the cap {cap} (search space n^(n*n))")]
    EnumerationTooLarge { n: usize, cap: usize },
    /// A word exceeds the oracle's configured length cap.
    #[error("word of length {len} exceeds the cap {cap}")]
    WordTooLong { len: usize, cap: usize },
    /// The given coordinates do not divide the Garside element.
    #[error("{0} is not a divisor of delta")]
    NotADivisor(String),
    /// An instance is too large for a dense construction (germ table,
    /// quotient enumeration).
    #[error("instance too large: {0}")]
    TooLarge(String),
    /// An operation was handed an empty tuple.
    #[error("empty tuple")]
    EmptyTuple,
    /// An internal cross-check failed; the table violates an invariant the
    /// construction relies on.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
