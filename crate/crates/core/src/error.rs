use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is outside the supported range [{min}, {max}]")]
    OutOfRange { value: u64, min: u64, max: u64 },

    #[error("degree {degree} is not supported (minimum {min})")]
    UnsupportedDegree { degree: u64, min: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "verdict for n = {n} is conditional on the strong Goldbach conjecture \
         (verified frontier is {frontier})"
    )]
    ConditionalVerdict { n: u64, frontier: u64 },

    #[error("group count for order {0} is not in the table")]
    MissingCount(u64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),
}
