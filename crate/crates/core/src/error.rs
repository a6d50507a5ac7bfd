use thiserror::Error;

/// Every failure the library reports. Claim failures are not errors; they
/// are verdict data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("cannot differentiate a series of order 0")]
    ZeroOrder,

    #[error("not a permutation of 1..{len}: {reason}")]
    NotAPermutation { len: usize, reason: String },

    #[error("duplicate entry {0} in word")]
    DuplicateEntry(u32),

    #[error("size {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("expected an odd up-down permutation of size >= 3, got {0}")]
    NotSplittable(String),

    #[error("inconsistent split data: {0}")]
    InconsistentSplit(String),

    #[error("permutation {0} is not alternating")]
    NotAlternating(String),

    #[error("index {index} outside the built range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("the Andre recurrence needs both seeds A_0 = A_1 = 1; refusing to apply it at n = 0")]
    RecurrenceAtZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("value is not an integer: {0}")]
    NotAnInteger(String),

    #[error("quadrature did not reach tolerance {tolerance:e} (estimated error {estimate:e})")]
    QuadratureDiverged { tolerance: f64, estimate: f64 },

    #[error("continued fraction level {level} has a denominator whose constant term is not a nonzero constant")]
    NonInvertibleDenominator { level: usize },

    #[error("cannot parse coefficient expression {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
