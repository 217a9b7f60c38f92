use thiserror::Error;

use crate::classifier::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{bits}-bit rows exceed the memory ceiling of {limit_bits} bits")]
    BudgetExceeded { bits: u32, limit_bits: u32 },

    #[error("bit length must be positive, got {0}")]
    InvalidBitLength(u32),

    #[error("digit {digit} at position {position} is not allowed here")]
    InvalidDigit { digit: u8, position: usize },

    #[error("cannot parse {0:?} as a digit string")]
    Parse(String),

    #[error("parameter {param:?} out of range for family {family} at n = {n}")]
    ParameterOutOfRange {
        family: Family,
        param: Option<u32>,
        n: u32,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
