//! Exact computational representation theory for finite subgroups of GL2.
//!
//! The crate builds finite matrix groups over cyclotomic fields, applies the
//! functor calculus of 2-dimensional representations (symmetric powers,
//! tensors, twists, duals, induction from index-2 subgroups) and decides
//! reducibility questions about symmetric powers with exact arithmetic: the
//! maximal irreducible symmetric power of an irreducible 2-dimensional
//! representation is 1, 2, 3 or 5 according to the projective image being
//! dihedral, tetrahedral, octahedral or icosahedral, and each case comes with
//! an explicit decomposition witness.
//!
//! Everything is exact: scalars are elements of cyclotomic fields Q(zeta_N)
//! with arbitrary-precision rational coefficients, so every equality in the
//! crate is a proof-grade identity, not a numerical approximation.
//!
//! The crate is `no_std` (it requires `alloc`); all I/O lives in the
//! companion CLI crate.

#![no_std]

extern crate alloc;

pub mod cyclotomic;
pub mod linalg;
pub mod group;
pub mod rep;
pub mod criteria;

pub use cyclotomic::{BigRational, CycError, CycNum};
