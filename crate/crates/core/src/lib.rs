//! Exact combinatorics of binomial Horn systems.
//!
//! Given an integer matrix `B` of full column rank whose integer column span
//! consists of mixed vectors, this crate computes
//!
//! * a Gale-dual grading matrix `A` with `A·B = 0` ([`model`]),
//! * the block decompositions of `B` and their toral/Andean classes ([`decomp`]),
//! * bounded `M`-subgraphs of `ℕ^q` with terminating boundedness certificates ([`subgraph`]),
//! * normalized volumes, facet support functions and nonresonance ([`geometry`]),
//! * the generic holonomic rank `Σ μ_M · g(B_J) · vol(A_J)` ([`rank`]),
//! * truncated Puiseux series solution bases and their verification ([`series`]).
//!
//! All arithmetic is exact (arbitrary precision integers and rationals, and
//! cyclotomic fields for character twists).

pub mod decomp;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod linalg;
pub mod lp;
pub mod model;
pub mod rank;
pub mod series;
pub mod subgraph;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, LatticeBasis};
pub use model::HornInput;

/// Arbitrary precision integer used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary precision rational used throughout.
pub type Rat = num_rational::BigRational;
