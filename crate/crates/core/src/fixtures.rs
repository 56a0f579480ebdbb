//! Named example matrices used in tests, documentation and the CLI.

use crate::linalg::IntMatrix;

/// Two-variable system whose grading is the twisted cubic.
pub fn b_erd() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[1, 0], &[-2, 1], &[1, -2], &[0, 1]])
}

/// Weights `(3,2,1,0), (0,1,2,3)` for [`b_erd`]; they span an index-3 sublattice.
pub fn a_erd() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[3, 2, 1, 0], &[0, 1, 2, 3]])
}

/// A system with a one-dimensional Andean direction.
pub fn b_nh() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[1, 1], &[-1, -1], &[1, 0], &[0, 1]])
}

pub fn a_nh() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[1, 1, 0, 0], &[0, 1, 1, 1]])
}

/// A system with nine algebraic solutions and a non-saturated lattice.
pub fn b_mellin() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[-2, -1], &[3, 0], &[0, 3], &[-1, -2]])
}

pub fn a_mellin() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[1, 1, 1, 1], &[3, 2, 1, 0]])
}

/// A system that is non-holonomic for every parameter.
pub fn b_him() -> IntMatrix {
    IntMatrix::from_i64_rows(&[
        &[1, 1, 1],
        &[-1, -2, -3],
        &[1, 0, 0],
        &[0, 1, 0],
        &[0, 0, 1],
    ])
}

pub fn a_him() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[-3, -1, 2, 1, 0], &[-1, 0, 1, 1, 1]])
}

/// The Gauss hypergeometric lattice `(1,-1,-1,1)ᵀ`.
pub fn b_gauss() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[1], &[-1], &[-1], &[1]])
}

/// A mixed invertible 3×3 matrix whose bounded subgraphs are the degree
/// slices 0..=3 of `N^3`.
pub fn m3() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[1, -5, 0], &[-1, 1, -1], &[0, 3, 1]])
}

/// The lower block of [`b_erd`] on rows 2 and 3.
pub fn m_erd23() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[-2, 1], &[1, -2]])
}
