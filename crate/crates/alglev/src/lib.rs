//! Exact-arithmetic toolkit for degenerations and levels of
//! finite-dimensional nonassociative algebras.
//!
//! The crate computes, entirely over exact rationals:
//!
//! - partition dominance, covers and the level function,
//! - full specters (eigenvalue / Jordan-type data) of rational matrices and
//!   their canonical matrix representatives,
//! - structure-constant algebras, polynomial identity predicates and a
//!   catalog of the named structures used throughout,
//! - generation type via generic-point subalgebra closure,
//! - parametrized-basis contractions, degeneration witnesses and closed
//!   invariant sets,
//! - the variety of generation-type-1 algebras with a square-zero ideal of
//!   codimension 1 (construction, orbit tests, the degeneration criterion,
//!   levels, primary witnesses, table emission),
//! - trivial singular extensions of 2-dimensional algebras and the
//!   generation-type-2 criterion,
//! - level-1/level-2 classification lists and bilinear-form level chains.

pub mod algebra;
pub mod classify;
pub mod degeneration;
pub mod exact;
pub mod extensions;
pub mod gentype;
pub mod partitions;
pub mod spectra;
pub mod tn;
pub mod verify;
pub mod witnesses;

pub use exact::{frac, int, parse_scalar, ExactMatrix, LaurentPoly, MPoly, Ring, Scalar};
pub use partitions::{parse_partition, Partition};
