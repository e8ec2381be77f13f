use thiserror::Error;

use crate::verify::Counterexample;

/// Errors raised by sequence construction, the builders and the verifiers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("sequences must contain at least one bit")]
    Empty,

    #[error("invalid bit {0:?}: expected '0' or '1'")]
    InvalidBit(char),

    #[error("tuple order {0} is outside the supported range 1..=64")]
    UnsupportedOrder(usize),

    #[error("cycle of length {len} repeats with period {period}; pass the minimal period")]
    NonMinimalPeriod { len: usize, period: usize },

    #[error("window [{index}, {index}+{order}) does not fit in a sequence of length {len}")]
    OutOfRange {
        index: usize,
        order: usize,
        len: usize,
    },

    #[error("operation needs length at least {needed}, got {len}")]
    TooShort { needed: usize, len: usize },

    #[error("order {order} is outside the domain of {what} (needs n >= {min})")]
    Domain {
        what: &'static str,
        order: usize,
        min: usize,
    },

    #[error("expected exactly one cyclic occurrence of {tuple}, found {found}")]
    RunCount { tuple: String, found: usize },

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("starter rejected: {property}")]
    StarterRejected { property: String },

    #[error("sequence is not {property} at order {order}: {counterexample}")]
    Violation {
        property: &'static str,
        order: usize,
        counterexample: Counterexample,
    },

    #[error("tuple order {got} does not match index order {expected}")]
    OrderMismatch { expected: usize, got: usize },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
