//! Exact integer and rational linear algebra.

mod hnf;
mod lattice;
mod matrix;
pub mod rational;
mod snf;

pub use hnf::{column_hnf, row_hnf};
pub(crate) use lattice::combinations;
pub use lattice::{
    int_rank, kernel_basis, lattice_index, lattice_index_by_invariant_factors,
    lattice_index_by_minors, saturation, LatticeBasis,
};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
