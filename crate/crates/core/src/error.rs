use alloc::string::String;

use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    /// The requested coefficient lies beyond the truncation order, so its
    /// value was discarded and is unknown.
    #[error("v-degree {degree} exceeds truncation order {order}")]
    OutOfRange { degree: usize, order: usize },

    #[error("partition weight {weight} differs from r*n = {expected}")]
    WeightMismatch { weight: usize, expected: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("brute-force enumeration needs {required} words, above the cap of {cap}")]
    CapExceeded { required: BigUint, cap: u64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
