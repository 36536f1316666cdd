use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("alphabet restriction mismatch: {0} vs {1}")]
    RestrictionMismatch(usize, usize),

    #[error("Kashiwara index {index} out of range for rank {n} (restriction {restriction})")]
    IndexOutOfRange {
        index: usize,
        n: usize,
        restriction: usize,
    },

    #[error("invalid crystal element: {0}")]
    InvalidElement(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("length mismatch: {0}")]
    LengthMismatch(String),

    #[error("invalid rigged configuration: {0}")]
    InvalidRc(String),

    #[error("word is not highest weight (raising operator {index} does not annihilate it)")]
    NotHighest { index: usize },

    #[error("affine word is not normal ordered: {0}")]
    NotNormalOrdered(String),

    #[error("enumeration cap exceeded: |mu0| = {size} > cap = {cap}")]
    CapExceeded { size: u32, cap: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
