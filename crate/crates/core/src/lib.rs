//! Finite-dimensionality of simple highest-weight modules for the exceptional
//! algebraic supergroups `D(2|1;ζ)`, `G(3)` and `F(3|1)`.
//!
//! The crate decides whether `L(λ)` is finite dimensional for a dominant
//! integral weight `λ` over a field of characteristic `p` (or zero) by two
//! independent routes:
//!
//! * [`classifier::classify_by_reflections`] transports `λ` across the fixed
//!   graph of odd reflections between Borel subalgebras with a common even
//!   part and asks that every transported weight stay dominant;
//! * [`classifier::classify_by_theorem`] evaluates the closed-form congruence
//!   clauses of the classification theorems.
//!
//! [`euler`] computes the Euler characteristic `χ(λ)` as an exact Laurent
//! polynomial.
//!
//! Everything is exact integer arithmetic; the crate is `no_std` with `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classifier;
pub mod euler;
pub mod field;
pub mod lattice;
mod linalg;
pub mod reflection;

mod error;

pub use error::Error;
pub use field::{Characteristic, Residue, ScalarContext, ZetaMode};
pub use lattice::{FormValue, MetricVector, RootDatum, SuperType, Weight, WeightBox};
