use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),

    #[error("malformed partition string {0:?}")]
    BadPartitionString(String),

    #[error("partition {partition} has {len} nonzero parts but rank is {rank}")]
    TooManyParts {
        partition: String,
        len: usize,
        rank: usize,
    },

    #[error("rank must be at least 1, got {0}")]
    BadRank(usize),

    #[error("expected {expected} fundamental coefficients for rank {rank}, got {got}")]
    CoeffLength {
        rank: usize,
        expected: usize,
        got: usize,
    },

    #[error("requires p ≥ q ≥ 1 (got p={p}, q={q})")]
    BadPq { p: usize, q: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("odd or negative coefficient {coeff} at [{partition}] while halving; inconsistent Adams term")]
    Halving { partition: String, coeff: String },

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("monomial expansion exceeds cap of {cap} terms")]
    ExpansionTooLarge { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
