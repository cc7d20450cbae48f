use thiserror::Error;

use crate::perm::Partition;

/// Errors produced by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("not a rational number: {0}")]
    InvalidRational(String),

    #[error("expected a 3-cycle, got {0}")]
    NotThreeCycle(String),

    #[error("point {point} is not valid here: {reason}")]
    InvalidPoint { point: usize, reason: &'static str },

    #[error("minimal 3-cycle chains need n >= 3, got {0}")]
    ChainTooShort(usize),

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("missing count for n={n}, alpha=({alpha})")]
    MissingCount { n: usize, alpha: Partition },

    #[error("enumeration budget exceeded: {needed} tuples > budget {budget}; use the dynamic program instead")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("tuple is not a minimal transitive factorization: {0}")]
    NotMinimal(String),

    #[error("unsupported degree d={0} for this operator")]
    UnsupportedDegree(usize),

    #[error("operator term table covers weight {have}, weight {need} is required")]
    TableIncomplete { have: usize, need: usize },

    #[error("inadmissible monomial ({alpha}) carries a nonzero coefficient")]
    InadmissibleMonomial { alpha: Partition },

    #[error("u-grading violated for term B=({b}) A=({a}): mu_out={mu_out}, sum mu_in + 1={expected}")]
    GradingViolation {
        b: Partition,
        a: Partition,
        mu_out: String,
        expected: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
