//! Exact series: cyclotomic scalars, Puiseux polynomials, differential
//! operators, solution construction and verification.

pub mod construct;
pub mod horn;
pub mod ops;
pub mod puiseux;
pub mod scalar;
pub mod verify;

pub use construct::{
    antiderivative_shift, assemble_f, characters, edge_coefficient_ratio, g_gamma, gamma_series,
    solution_basis, Character, CharacterSet, SolutionBasis, SolutionEntry, SolveOptions,
};
pub use horn::{horn_classical_operators, HornOperator, LinearForm, ThetaPoly};
pub use ops::{apply_operator, falling, DiffOp};
pub use puiseux::{Exponent, PuiseuxSeries, Support};
pub use scalar::Scalar;
pub use verify::{horn_system_operators, verify_annihilation, OperatorCheck, VerificationReport};
