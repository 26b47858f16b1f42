//! Exact computation with affine semigroups and 𝒞-semigroups in ℕ^p:
//! quotients by a positive integer, the covers `T` with `T/d = S`, cover
//! trees over arithmetic varieties, and symmetric and pseudo-symmetric
//! constructions.
//!
//! Everything is exact. Coordinates are `i64` with checked arithmetic and
//! rational geometry runs over `Ratio<i128>`.

// CSemigroup caches derived data in OnceLocks; Hash and Eq ignore the caches.
#![allow(clippy::mutable_key_type)]

pub mod covers;
pub mod error;
pub mod hilbert;
pub mod irreducible;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod quotient;
pub mod semigroup;
pub mod varieties;

pub use error::{Error, ErrorClass, Result};
pub use hilbert::{hilbert_basis, reduce_generating_set, DiophantineSystem, HilbertBasis};
pub use lattice::{pt, Cone, LatticePoint, OrderKind, TotalOrder};
pub use semigroup::{gaps_from_generators, CSemigroup, GeneratedSemigroup, Membership, SemigroupSpec};
