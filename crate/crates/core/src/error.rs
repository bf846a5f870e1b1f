use thiserror::Error;

/// Errors raised by label construction, the character oracle and the case builders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing and nonnegative")]
    InvalidPartition(Vec<i64>),

    #[error("invalid irreducible label: {0}")]
    InvalidLabel(String),

    #[error("labels do not share a family and rank: {0} vs {1}")]
    FamilyMismatch(String, String),

    #[error("empty tensor product")]
    EmptyProduct,

    /// The greedy decomposition produced a negative multiplicity. This can only
    /// happen if a character is wrong, so it is reported rather than clamped.
    #[error("oracle invariant violated: negative multiplicity {mult} for {label}")]
    NegativeMultiplicity { label: String, mult: String },

    #[error("inexact Laurent division")]
    InexactDivision,

    #[error("invalid case parameters: {0}")]
    InvalidCase(String),

    #[error("tau does not match case: {0}")]
    TauMismatch(String),

    #[error("cache i/o: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
