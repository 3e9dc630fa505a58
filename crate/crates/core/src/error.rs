use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not exactly divisible")]
    NonDivisible,

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("ill-formed web at slice {index}: {reason}")]
    IllFormed { index: usize, reason: String },

    #[error("ladder annihilated: color {color} leaves 0..={n} at upright {upright}")]
    Annihilated { upright: usize, color: i64, n: usize },

    #[error("normalization exponent is not integral")]
    NonIntegral,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
