//! Checking that operators annihilate a (possibly truncated) series.

use super::ops::{apply_operator, DiffOp};
use super::puiseux::{Exponent, PuiseuxSeries};
use super::scalar::Scalar;
use crate::model::HornInput;
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorCheck {
    pub operator: String,
    /// Nonzero output terms whose every source coefficient is exact. Must be
    /// empty for a solution.
    pub interior_residual: Vec<(Exponent, Scalar)>,
    /// Nonzero output terms touched by truncation; informational.
    pub boundary_terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub passed: bool,
    pub checks: Vec<OperatorCheck>,
}

/// Applies each operator and sorts the nonzero output terms into interior
/// ones (computed from exact coefficients only) and boundary ones.
pub fn verify_annihilation(ops: &[DiffOp], s: &PuiseuxSeries) -> VerificationReport {
    let checks: Vec<OperatorCheck> = ops
        .iter()
        .map(|op| {
            let out = apply_operator(op, s);
            let mut interior_residual = Vec::new();
            let mut boundary_terms = 0;
            for (e, c) in out.terms() {
                if op.sources(e).iter().all(|src| s.is_exact_at(src)) {
                    interior_residual.push((e.clone(), c.clone()));
                } else {
                    boundary_terms += 1;
                }
            }
            OperatorCheck {
                operator: op.describe(),
                interior_residual,
                boundary_terms,
            }
        })
        .collect();
    let passed = checks.iter().all(|c| c.interior_residual.is_empty());
    VerificationReport { passed, checks }
}

/// Generators of the Horn system at `beta`: `∂^{b+} - ∂^{b-}` for each column
/// `b` of `B`, and the Euler operators `Σ_j a_ij x_j ∂_j - β_i`.
pub fn horn_system_operators(input: &HornInput, beta: &[Rat]) -> Vec<DiffOp> {
    let mut ops: Vec<DiffOp> = input
        .b()
        .column_vecs()
        .iter()
        .map(|c| DiffOp::binomial_of(c))
        .collect();
    for (i, b) in beta.iter().enumerate() {
        let row: Vec<Rat> = input
            .a()
            .row(i)
            .iter()
            .map(|x| Rat::from_integer(x.clone()))
            .collect();
        ops.push(DiffOp::Euler {
            row,
            beta: Scalar::from_rat(b.clone()),
        });
    }
    ops
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{kernel_basis, LatticeBasis};
    use crate::series::construct::{gamma_series, solution_basis, SolveOptions};

    fn q(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter()
            .map(|&(a, b)| Rat::new(a.into(), b.into()))
            .collect()
    }

    fn cubic_binomials() -> Vec<DiffOp> {
        [
            [1, 0, 1, 0, 0, 2, 0, 0],
            [0, 1, 0, 1, 0, 0, 2, 0],
            [1, 0, 0, 1, 0, 1, 1, 0],
        ]
        .iter()
        .map(|r| DiffOp::Binomial {
            u_plus: r[..4].to_vec(),
            u_minus: r[4..].to_vec(),
            lambda: Scalar::one(),
        })
        .collect()
    }

    #[test]
    fn monomial_solution_is_exact() {
        let input =
            crate::HornInput::with_a_sublattice(fixtures::b_erd(), fixtures::a_erd()).unwrap();
        let beta = q(&[(1, 2), (1, 3)]);
        let s = PuiseuxSeries::monomial(q(&[(1, 6), (0, 1), (0, 1), (1, 9)]), Scalar::one());
        let r = verify_annihilation(&horn_system_operators(&input, &beta), &s);
        assert!(r.passed);
        assert!(r.checks.iter().all(|c| c.boundary_terms == 0));
    }

    #[test]
    fn twisted_cubic_gamma_series() {
        let a = fixtures::a_erd();
        let l = LatticeBasis::from_generators(&kernel_basis(&a));
        let v = q(&[(1, 5), (2, 7), (0, 1), (-3, 11)]);
        let beta = a.mul_rat_vec(&v);
        let s = gamma_series(&a, &l, &v, 3, None).unwrap();
        let mut ops = cubic_binomials();
        for (i, b) in beta.iter().enumerate() {
            let row = a
                .row(i)
                .iter()
                .map(|x| Rat::from_integer(x.clone()))
                .collect();
            ops.push(DiffOp::Euler {
                row,
                beta: Scalar::from_rat(b.clone()),
            });
        }
        let r = verify_annihilation(&ops, &s);
        assert!(r.passed, "{r:?}");
        assert!(r.checks[0].boundary_terms > 0);
    }

    #[test]
    fn perturbed_coefficient_is_caught() {
        let a = fixtures::a_erd();
        let l = LatticeBasis::from_generators(&kernel_basis(&a));
        let v = q(&[(1, 5), (2, 7), (0, 1), (-3, 11)]);
        let mut s = gamma_series(&a, &l, &v, 3, None).unwrap();
        let first = s
            .terms()
            .keys()
            .find(|e| e.iter().zip(&v).all(|(x, y)| x == y))
            .unwrap()
            .clone();
        s.add_term(first, Scalar::from_int(1));
        let r = verify_annihilation(&cubic_binomials(), &s);
        assert!(!r.passed);
    }

    #[test]
    fn erdelyi_basis_verifies() {
        let input =
            crate::HornInput::with_a_sublattice(fixtures::b_erd(), fixtures::a_erd()).unwrap();
        let beta = q(&[(1, 2), (1, 3)]);
        let basis = solution_basis(
            &input,
            &beta,
            SolveOptions {
                truncation: 4,
                ..Default::default()
            },
        )
        .unwrap();
        let ops = horn_system_operators(&input, &beta);
        for e in &basis.entries {
            let r = verify_annihilation(&ops, &e.series);
            assert!(r.passed, "{:?}", r.checks);
        }
        assert_eq!(basis.entries.len(), 4);
    }

    #[test]
    fn twisted_mellin_basis_verifies() {
        let input = crate::HornInput::with_a(fixtures::b_mellin(), fixtures::a_mellin()).unwrap();
        let beta = q(&[(1, 5), (2, 7)]);
        let opts = SolveOptions {
            truncation: 3,
            field_root: 3,
            ..Default::default()
        };
        let basis = solution_basis(&input, &beta, opts).unwrap();
        let ops = horn_system_operators(&input, &beta);
        assert_eq!(basis.entries.len(), 9);
        for e in &basis.entries {
            assert!(verify_annihilation(&ops, &e.series).passed);
        }
    }

    #[test]
    fn gauss_basis_verifies() {
        let input = crate::HornInput::new(fixtures::b_gauss()).unwrap();
        let beta = input
            .a()
            .mul_rat_vec(&q(&[(0, 1), (-1, 3), (-2, 5), (-4, 7)]));
        let basis = solution_basis(&input, &beta, SolveOptions::default()).unwrap();
        assert_eq!(basis.entries.len(), 2);
        let ops = horn_system_operators(&input, &beta);
        for e in &basis.entries {
            assert!(verify_annihilation(&ops, &e.series).passed);
        }
    }
}
