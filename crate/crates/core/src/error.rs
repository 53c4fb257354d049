use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cycle form: {0}")]
    InvalidCycleForm(String),

    #[error("cycle form is not standard: {0}")]
    NotStandard(String),

    #[error("expected a single cycle, found {0} cycles")]
    NotSingleCycle(usize),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
