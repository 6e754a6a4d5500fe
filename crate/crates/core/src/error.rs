use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of 65536")]
    OrderTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("expected a nonzero vector")]
    ZeroVector,
    #[error("not an invertible upper-triangular matrix: {0}")]
    NotUpperTriangular(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("entry {value} is not an element of GF({q})")]
    InvalidElement { value: u64, q: u32 },
    #[error("code has {q}^{rank} codewords, more than the enumeration limit of 2^24")]
    TooLarge { q: u32, rank: usize },
    #[error("the code is the zero code")]
    ZeroCode,
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: entry {value} is out of range for GF({q})")]
    Range { line: usize, column: usize, value: u64, q: u32 },
    #[error("line {line}: bad header: {message}")]
    Header { line: usize, message: String },
    #[error("malformed JSON document: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
