use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    /// Exact division left a nonzero remainder.
    #[error("not divisible: the quotient is not a polynomial")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("group of order {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: String, cap: usize },

    #[error("composition {parts:?} is incompatible with rank {rank}")]
    IncompatibleComposition { parts: Vec<usize>, rank: usize },

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("input is not invariant under the Weyl group of the fiber subgroup")]
    NotInvariant,

    #[error("positive roots of the subgroup are not contained in those of the group")]
    RootContainment,

    #[error("equivariant Euler class at a fixed point is zero")]
    ZeroEuler,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
