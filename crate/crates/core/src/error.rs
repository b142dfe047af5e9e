use thiserror::Error;

/// Errors produced by every computation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("image sequence is not a bijection of 0..{degree}")]
    NotBijection { degree: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("action is not transitive")]
    NotTransitive,

    #[error("action is not faithful")]
    NotFaithful,

    #[error("partition is not invariant under the group")]
    NotInvariant,

    #[error("subset is not invariant under the group")]
    SubsetNotInvariant,

    #[error("not a subgroup: generator {index} lies outside the parent group")]
    NotSubgroup { index: usize },

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    OrderTooLarge { order: String, bound: u64 },

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
