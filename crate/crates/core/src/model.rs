//! Validation of the matrix `B`, and the grading matrix `A` dual to it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int_rank, kernel_basis, lattice_index, row_hnf, IntMatrix};
use crate::lp::{feasible, LpOutcome};
use crate::Rat;

/// Parameter vector `β`, one exact rational per row of `A`.
pub type Parameter = Vec<Rat>;

/// Why a candidate `B` was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BViolation {
    /// Columns are linearly dependent.
    RankDeficient { rank: usize },
    /// A nonzero nonnegative vector in the integer column span, made primitive.
    Unmixed(Vec<BigInt>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BReport {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub violation: Option<BViolation>,
}

impl BReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that `b` has full column rank and that every nonzero integer vector
/// in its column span has entries of both signs.
///
/// The span contains a nonzero vector `v >= 0` exactly when the system
/// `B z >= 0, 1ᵀ B z >= 1` is feasible, which is decided exactly.
pub fn validate_b(b: &IntMatrix) -> Result<BReport> {
    let (n, m) = (b.rows(), b.cols());
    let rank = int_rank(b);
    let mut report = BReport {
        rows: n,
        cols: m,
        rank,
        violation: None,
    };
    if rank < m {
        report.violation = Some(BViolation::RankDeficient { rank });
        return Ok(report);
    }
    let mut rows = b.to_rat_rows();
    let sums: Vec<Rat> = (0..m)
        .map(|k| rows.iter().fold(Rat::zero(), |acc, r| acc + &r[k]))
        .collect();
    rows.push(sums);
    let mut rhs = vec![Rat::zero(); n];
    rhs.push(Rat::one());
    if let LpOutcome::Feasible(z) = feasible(&rows, &rhs, m)? {
        let v = b.mul_rat_vec(&z);
        report.violation = Some(BViolation::Unmixed(primitive_integer(&v)));
    }
    Ok(report)
}

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction.
pub(crate) fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Result of [`is_pointed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pointedness {
    /// A functional `h` with `h · a_j >= 1` for every column.
    Pointed(Vec<Rat>),
    /// Nonnegative, not all zero, weights `y` with `Σ y_j a_j = 0`.
    NotPointed(Vec<Rat>),
}

impl Pointedness {
    pub fn is_pointed(&self) -> bool {
        matches!(self, Pointedness::Pointed(_))
    }
}

/// Decides whether all columns of `a` lie in one open half-space through the
/// origin. With `a` having no rows the answer is vacuously yes.
pub fn is_pointed(a: &IntMatrix) -> Result<Pointedness> {
    let d = a.rows();
    if d == 0 {
        return Ok(Pointedness::Pointed(Vec::new()));
    }
    let rows = a.transpose().to_rat_rows();
    let rhs = vec![Rat::one(); a.cols()];
    Ok(match feasible(&rows, &rhs, d)? {
        LpOutcome::Feasible(h) => Pointedness::Pointed(h),
        LpOutcome::Infeasible(y) => Pointedness::NotPointed(y),
    })
}

/// Grading matrix of `b`: the row Hermite basis of the left kernel
/// `{y : y B = 0}`. Its columns span `Z^d` and the cone they generate is
/// pointed whenever `b` passes [`validate_b`].
pub fn compute_a(b: &IntMatrix) -> Result<IntMatrix> {
    let report = validate_b(b)?;
    if let Some(v) = report.violation {
        return Err(Error::Convention(describe_violation(&v)));
    }
    let a = left_kernel(b);
    if !is_pointed(&a)?.is_pointed() {
        return Err(Error::Internal(
            "grading matrix of a mixed B is not pointed".into(),
        ));
    }
    Ok(a)
}

fn left_kernel(b: &IntMatrix) -> IntMatrix {
    let k = kernel_basis(&b.transpose());
    let a = row_hnf(&k.transpose());
    if a.rows() == 0 {
        IntMatrix::zeros(0, b.rows())
    } else {
        a
    }
}

pub fn describe_violation(v: &BViolation) -> String {
    match v {
        BViolation::RankDeficient { rank } => {
            format!("B does not have full column rank (rank {rank})")
        }
        BViolation::Unmixed(w) => {
            let s: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            format!(
                "column span of B contains the non-mixed vector ({})",
                s.join(",")
            )
        }
    }
}

/// A validated pair `(B, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornInput {
    b: IntMatrix,
    a: IntMatrix,
    a_index: BigInt,
}

impl HornInput {
    /// Validates `b` and computes `A` from it.
    pub fn new(b: IntMatrix) -> Result<Self> {
        let a = compute_a(&b)?;
        Ok(HornInput {
            b,
            a,
            a_index: BigInt::one(),
        })
    }

    /// Validates `b` together with a user-supplied `a` whose columns must span
    /// `Z^d`.
    pub fn with_a(b: IntMatrix, a: IntMatrix) -> Result<Self> {
        let input = Self::with_a_sublattice(b, a)?;
        if !input.a_index.is_one() {
            return Err(Error::Convention(format!(
                "columns of A span a sublattice of index {} in Z^{}",
                input.a_index,
                input.d()
            )));
        }
        Ok(input)
    }

    /// Like [`HornInput::with_a`] but accepts an `a` whose columns span a
    /// finite-index sublattice of `Z^d`. Such an `a` differs from a valid one
    /// by a rational change of coordinates, which leaves volumes, support
    /// functions and nonresonance unchanged.
    pub fn with_a_sublattice(b: IntMatrix, a: IntMatrix) -> Result<Self> {
        let report = validate_b(&b)?;
        if let Some(v) = report.violation {
            return Err(Error::Convention(describe_violation(&v)));
        }
        let (n, m) = (b.rows(), b.cols());
        if a.cols() != n || a.rows() != n - m {
            return Err(Error::Dimension(format!(
                "A must be {}x{}, got {}x{}",
                n - m,
                n,
                a.rows(),
                a.cols()
            )));
        }
        if !(&a * &b).is_zero() {
            return Err(Error::Convention("A·B is not zero".into()));
        }
        if int_rank(&a) != a.rows() {
            return Err(Error::Convention("A does not have full row rank".into()));
        }
        if let Pointedness::NotPointed(_) = is_pointed(&a)? {
            return Err(Error::Convention(
                "columns of A do not span a pointed cone".into(),
            ));
        }
        let a_index = lattice_index(&a)?;
        Ok(HornInput { b, a, a_index })
    }

    pub fn b(&self) -> &IntMatrix {
        &self.b
    }

    pub fn a(&self) -> &IntMatrix {
        &self.a
    }

    pub fn n(&self) -> usize {
        self.b.rows()
    }

    pub fn m(&self) -> usize {
        self.b.cols()
    }

    pub fn d(&self) -> usize {
        self.a.rows()
    }

    /// Index of the column lattice of `A` in `Z^d` (1 unless built with
    /// [`HornInput::with_a_sublattice`]).
    pub fn a_index(&self) -> &BigInt {
        &self.a_index
    }

    pub fn check_beta(&self, beta: &[Rat]) -> Result<()> {
        if beta.len() != self.d() {
            return Err(Error::Dimension(format!(
                "beta has {} entries, expected {}",
                beta.len(),
                self.d()
            )));
        }
        Ok(())
    }
}

/// True when `v` has a strictly positive and a strictly negative entry.
pub fn is_mixed(v: &[BigInt]) -> bool {
    v.iter().any(Signed::is_positive) && v.iter().any(Signed::is_negative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn accepts_fixtures() {
        for b in [
            fixtures::b_erd(),
            fixtures::b_gauss(),
            fixtures::b_mellin(),
            fixtures::b_nh(),
            fixtures::b_him(),
        ] {
            assert!(validate_b(&b).unwrap().is_valid(), "{b}");
        }
    }

    #[test]
    fn rejects_unmixed_column() {
        let b = IntMatrix::from_i64_rows(&[&[1], &[0], &[0]]);
        let r = validate_b(&b).unwrap();
        assert_eq!(r.violation, Some(BViolation::Unmixed(bi(&[1, 0, 0]))));
    }

    #[test]
    fn rejects_hidden_unmixed_combination() {
        // columns mixed, but their sum is (1,0,1)
        let b = IntMatrix::from_i64_rows(&[&[2, -1], &[-1, 1], &[1, 0]]);
        let r = validate_b(&b).unwrap();
        let Some(BViolation::Unmixed(v)) = r.violation else {
            panic!("expected rejection")
        };
        assert!(v.iter().all(|x| !x.is_negative()));
        assert!(!v.iter().all(Zero::is_zero));
    }

    #[test]
    fn rejects_rank_deficient() {
        let b = IntMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]);
        assert_eq!(
            validate_b(&b).unwrap().violation,
            Some(BViolation::RankDeficient { rank: 1 })
        );
    }

    #[test]
    fn computed_a_matches_displayed_weights() {
        let a = compute_a(&fixtures::b_nh()).unwrap();
        assert_eq!(row_hnf(&a), row_hnf(&fixtures::a_nh()));
        let a = compute_a(&fixtures::b_erd()).unwrap();
        assert!((&a * &fixtures::b_erd()).is_zero());
        assert_eq!(
            a,
            IntMatrix::from_i64_rows(&[&[1, 0, -1, -2], &[0, 1, 2, 3]])
        );
        // the displayed weights only agree up to a rational change of basis
        assert_eq!(lattice_index(&fixtures::a_erd()).unwrap(), BigInt::from(3));
    }

    #[test]
    fn pointedness() {
        let p = is_pointed(&fixtures::a_erd()).unwrap();
        let Pointedness::Pointed(h) = p else { panic!() };
        for c in fixtures::a_erd().column_vecs() {
            let v: Rat = c
                .iter()
                .zip(&h)
                .map(|(x, y)| Rat::from_integer(x.clone()) * y)
                .sum();
            assert!(v.is_positive());
        }
        let opp = IntMatrix::from_i64_rows(&[&[1, -1], &[0, 0]]);
        assert!(matches!(
            is_pointed(&opp).unwrap(),
            Pointedness::NotPointed(_)
        ));
        assert!(is_pointed(&fixtures::a_him()).unwrap().is_pointed());
    }

    #[test]
    fn supplied_a_checks() {
        assert!(HornInput::with_a(fixtures::b_nh(), fixtures::a_nh()).is_ok());
        assert!(matches!(
            HornInput::with_a(fixtures::b_erd(), fixtures::a_erd()),
            Err(Error::Convention(_))
        ));
        let lenient = HornInput::with_a_sublattice(fixtures::b_erd(), fixtures::a_erd()).unwrap();
        assert_eq!(lenient.a_index(), &BigInt::from(3));
        assert!(HornInput::with_a(fixtures::b_nh(), fixtures::a_erd()).is_err());
    }

    #[test]
    fn square_b_is_never_mixed() {
        // a full-rank sublattice of Z^n contains positive vectors
        let r = validate_b(&fixtures::m3()).unwrap();
        assert!(matches!(r.violation, Some(BViolation::Unmixed(_))));
        let input = HornInput::new(IntMatrix::zeros(0, 0)).unwrap();
        assert_eq!((input.n(), input.d()), (0, 0));
    }
}
