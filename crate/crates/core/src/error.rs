use thiserror::Error;

use crate::square::Base;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be between 1 and {max}, got {order}")]
    OrderOutOfRange { order: i64, max: usize },

    #[error("order {0} is even; only odd orders are supported")]
    EvenOrder(usize),

    #[error("order {order} is too small, need at least {min}")]
    OrderTooSmall { order: usize, min: usize },

    #[error("expected {expected} entries for the given order, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("entry {value} at ({row}, {col}) is outside the range of {base}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        base: Base,
    },

    #[error("modulus must be at least {min}, got {modulus}")]
    InvalidModulus { modulus: i64, min: i64 },

    #[error("composite order {order} exceeds the limit of {max}")]
    CompositeTooLarge { order: usize, max: usize },

    #[error("operand with base {base} does not belong to group {group}")]
    GroupMismatch { base: Base, group: String },

    #[error("squares have different orders ({left} and {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("search needs {needed} cases, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("search bounds out of range: {0}")]
    InvalidSearch(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}
