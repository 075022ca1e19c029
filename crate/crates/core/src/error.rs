use thiserror::Error;

use crate::word_algebra::Word;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("composition parts must be positive integers, found 0 at position {position}")]
    ZeroPart { position: usize },

    #[error("parameter `{name}` must be at least {min}, got {value}")]
    OutOfRange {
        name: &'static str,
        value: u64,
        min: u64,
    },

    #[error("subscript {subscript} at position {position} is not a multiple of {n}")]
    NotMultiple {
        subscript: u32,
        position: usize,
        n: u32,
    },

    #[error("composition sums to {actual}, expected {expected}")]
    SumMismatch { expected: u64, actual: u64 },

    #[error("split point ell = {ell} must satisfy 1 <= ell < k = {k}")]
    SplitOutOfRange { k: u32, ell: u32 },

    #[error("part r = {r} must satisfy 1 <= r <= k = {k}")]
    BlockCountOutOfRange { k: u32, r: u32 },

    #[error(
        "word {word} is not admissible: the last part must be >= 2 for the series to converge"
    )]
    Inadmissible { word: Word },

    #[error("Hurwitz shift x must be a finite positive real, got {0}")]
    InvalidShift(f64),

    #[error("truncation must be at least 1")]
    ZeroTruncation,

    #[error("cannot parse composition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
