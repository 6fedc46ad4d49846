//! Exact computational group and representation theory over finite fields
//! and cyclotomic number fields.
//!
//! The crate enumerates small finite matrix groups, certifies linear
//! representations of them over Q(ζ_n) by graph closure, decomposes
//! restrictions to abelian subgroups, and decides fixed-point questions
//! for abelian subgroups acting on projective spaces, invariant cubic
//! hypersurfaces and isotropic Grassmannians. Everything is exact; no
//! floating-point value ever enters a decision.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod field;
pub mod group;
pub mod linalg;
pub mod models;
pub mod obstruction;
pub mod rep;

pub use arith::{CycField, CycNum, Rat};
pub use field::{FqElem, FiniteField};
pub use group::{MatrixGroup, Subgroup};
pub use linalg::{CycMat, FqMat, Subspace};
pub use rep::{Character, Representation};

