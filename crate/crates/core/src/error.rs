use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension g must be at least 1, got {0}")]
    InvalidDimension(i64),

    #[error("expected a sequence of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid final type {nu:?} for g = {g}")]
    InvalidFinalType { g: usize, nu: Vec<u32> },

    #[error("invalid Young type {mu:?} for g = {g}: {reason}")]
    InvalidYoungType {
        g: usize,
        mu: Vec<u32>,
        reason: &'static str,
    },

    #[error("generator index {index} out of range 1..={g}")]
    GeneratorOutOfRange { g: usize, index: usize },

    #[error("not a permutation in the symplectic Weyl group W_{g}: {reason}")]
    InvalidWeylElement { g: usize, reason: String },

    #[error("mismatched dimensions: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("filtration is not totally ordered by inclusion")]
    NotTotallyOrdered,

    #[error("no final refinement of the canonical filtration exists in the coordinate model")]
    NoFinalRefinement,

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("{0}")]
    UndefinedFactor(String),

    #[error("classification table unavailable for g = {0} (only g <= 4)")]
    ClassificationUnavailable(usize),

    #[error("no golden row with final type {0:?}")]
    Unclassified(Vec<u32>),

    #[error("p-rank f = {f} out of range for g = {g}")]
    PRankOutOfRange { g: usize, f: i64 },

    #[error("golden data: {0}")]
    GoldenData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
