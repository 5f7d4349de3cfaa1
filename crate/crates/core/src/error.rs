use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter: generator index {gen} out of range for alphabet of size {size}")]
    InvalidLetter { gen: usize, size: usize },

    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("malformed exponent in `{0}`")]
    MalformedExponent(String),

    #[error("empty token in word")]
    EmptyToken,

    #[error("unexpected character `{found}` at offset {offset}")]
    UnexpectedChar { found: char, offset: usize },

    #[error("word too long ({0} letters)")]
    WordTooLong(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range for basis of size {size}")]
    BasisIndexOutOfRange { index: usize, size: usize },

    #[error("not in subgroup: final coset {coset}")]
    NotInSubgroup { coset: usize },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
