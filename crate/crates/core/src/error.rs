use thiserror::Error;

use crate::partition::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition text {0:?}: expected comma-separated positive integers")]
    EmptyOrMalformed(String),

    #[error("partition parts must be non-increasing, but part {index} ({part}) exceeds its predecessor ({previous})")]
    NonIncreasingViolation {
        index: usize,
        part: usize,
        previous: usize,
    },

    #[error("the empty partition has no inner corners")]
    EmptyPartition,

    #[error("{0} is not an inner corner of the shape")]
    NotAnInnerCorner(Cell),

    #[error("a first row of length {row} is shorter than the leading part {leading}")]
    RowTooShort { row: i64, leading: usize },

    #[error("{0} lies outside the shape")]
    CellOutsideShape(Cell),

    #[error("window h={h}, alpha={alpha} is out of range for a partition of {k}")]
    WindowOutOfRange { h: usize, alpha: usize, k: usize },

    #[error(
        "alpha={alpha} is out of range for h={h} on a partition of {k} (need 1 <= alpha <= k - h)"
    )]
    AlphaOutOfRange { h: usize, alpha: usize, k: usize },

    #[error("binomial polynomial order must be non-negative, got {0}")]
    NegativeOrder(i64),

    #[error("tableau is not in the source set: {0}")]
    NotInSourceSet(String),

    #[error("tableau is outside the pivot's domain: {0}")]
    NotInDomain(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("tableau is not standard: {0}")]
    NotStandard(String),

    #[error("invalid size bound: {0}")]
    InvalidBound(String),

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("internal error: inexact division in the hook formula for {0}")]
    InternalInexactDivision(String),

    #[error("internal error: non-integral binomial coefficient for {0}")]
    IntegralityViolation(String),

    #[error("internal error: coefficient b_{index} = {value} should vanish for {shape}")]
    VanishingViolation {
        shape: String,
        index: usize,
        value: String,
    },

    #[error("internal error: coefficient a_{index} = {value} should be positive for {shape}")]
    PositivityViolation {
        shape: String,
        index: usize,
        value: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
