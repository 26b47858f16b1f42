use thiserror::Error;

use crate::lattice::LatticePoint;

/// Broad failure classes, used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input data.
    Schema,
    /// A precondition or invariant of an operation was violated.
    Precondition,
    /// Fixed-width arithmetic overflowed.
    Overflow,
    /// A configurable search ceiling was reached.
    Guard,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arithmetic overflow")]
    Overflow,

    #[error("negative coordinate {0} in a lattice point")]
    NegativeCoordinate(i64),

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("gap {0} lies outside the cone")]
    GapOutsideCone(LatticePoint),

    #[error("not closed under addition: {left} + {right} = {gap} is listed as a gap")]
    NotClosed {
        gap: LatticePoint,
        left: LatticePoint,
        right: LatticePoint,
    },

    #[error("zero vector among generators")]
    ZeroGenerator,

    #[error("the divisor d must be a positive integer")]
    ZeroDivisor,

    #[error("semigroups live over different cones or orders")]
    Incompatible,

    #[error("{0} is not an element of the semigroup")]
    NotAMember(LatticePoint),

    #[error("order {0} has infinite initial segments; a graded order is required")]
    UnboundedOrder(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("postcondition failed: {0}")]
    Postcondition(String),

    #[error("search ceiling reached: {0}")]
    Ceiling(String),

    #[error("malformed input: {0}")]
    Schema(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Overflow => ErrorClass::Overflow,
            Error::Ceiling(_) => ErrorClass::Guard,
            Error::Schema(_) | Error::NegativeCoordinate(_) => ErrorClass::Schema,
            _ => ErrorClass::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
