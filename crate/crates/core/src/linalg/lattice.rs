use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{column_hnf, row_hnf, smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

/// Rank over the rationals (equal to the rank of the integer row lattice).
pub fn int_rank(a: &IntMatrix) -> usize {
    row_hnf(a).rows()
}

/// Basis of the integer kernel `{x in Z^n : a x = 0}` as the columns of an
/// `n × (n - rank)` matrix in column Hermite form.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let n = a.cols();
    let idx: Vec<usize> = (s.rank..n).collect();
    column_hnf(&s.v.select_columns(&idx))
}

/// Saturation `(Q L) ∩ Z^n` of the column lattice of `l` (an `n × k` matrix),
/// returned as a column Hermite basis.
pub fn saturation(l: &IntMatrix) -> IntMatrix {
    let dual = kernel_basis(&l.transpose());
    kernel_basis(&dual.transpose())
}

/// Index of the column lattice of `l` in its saturation, as the product of
/// the nonzero invariant factors.
pub fn lattice_index_by_invariant_factors(l: &IntMatrix) -> BigInt {
    smith_normal_form(l).invariant_factors().iter().product()
}

/// Index of the column lattice of `l` in its saturation, as the gcd of all
/// maximal nonvanishing minors. Returns `None` when there are too many minors
/// to enumerate.
pub fn lattice_index_by_minors(l: &IntMatrix) -> Option<BigInt> {
    const LIMIT: u128 = 200_000;
    let r = int_rank(l);
    if r == 0 {
        return Some(BigInt::one());
    }
    if binom(l.rows(), r).saturating_mul(binom(l.cols(), r)) > LIMIT {
        return None;
    }
    let mut g = BigInt::zero();
    for rows in combinations(l.rows(), r) {
        for cols in combinations(l.cols(), r) {
            let minor = l.submatrix(&rows, &cols).det().expect("square minor");
            g = g.gcd(&minor);
        }
    }
    Some(g)
}

/// `[sat(L) : L]` for the column lattice `L` of `l`. Both the invariant factor
/// and the minor computations are run when feasible and must agree.
pub fn lattice_index(l: &IntMatrix) -> Result<BigInt> {
    let by_snf = lattice_index_by_invariant_factors(l);
    if let Some(by_minors) = lattice_index_by_minors(l) {
        if by_minors != by_snf {
            return Err(Error::Internal(format!(
                "lattice index mismatch: invariant factors give {by_snf}, minors give {by_minors}"
            )));
        }
    }
    Ok(by_snf)
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] != i + n - k) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// A sublattice of `Z^ambient` held by its canonical column Hermite basis, so
/// two generating sets of the same lattice compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    ambient: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    /// Lattice spanned by the columns of `gens`.
    pub fn from_generators(gens: &IntMatrix) -> Self {
        let basis = column_hnf(gens);
        let pivots = (0..basis.cols())
            .map(|j| {
                (0..basis.rows())
                    .find(|&i| !basis.get(i, j).is_zero())
                    .expect("hermite columns are nonzero")
            })
            .collect();
        LatticeBasis {
            ambient: gens.rows(),
            basis,
            pivots,
        }
    }

    pub fn from_vectors(ambient: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        Ok(Self::from_generators(&IntMatrix::from_columns(
            ambient, gens,
        )?))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Basis vectors as columns.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the lattice.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut resid = v.to_vec();
        let mut c = Vec::with_capacity(self.rank());
        for (j, &p) in self.pivots.iter().enumerate() {
            let (q, r) = resid[p].div_rem(self.basis.get(p, j));
            if !r.is_zero() {
                return None;
            }
            for (i, r) in resid.iter_mut().enumerate() {
                *r -= self.basis.get(i, j) * &q;
            }
            c.push(q);
        }
        resid.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    /// Sum of absolute coordinates in the canonical basis.
    pub fn word_length(&self, v: &[BigInt]) -> Option<BigInt> {
        self.coords(v).map(|c| c.iter().map(|x| x.abs()).sum())
    }

    /// The vector with the given coordinates.
    pub fn point(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.basis.mul_vec(coords)
    }

    /// Index in the saturation.
    pub fn index(&self) -> Result<BigInt> {
        lattice_index(&self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_of_erdelyi_weights() {
        let a = IntMatrix::from_i64_rows(&[&[3, 2, 1, 0], &[0, 1, 2, 3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!((&a * &k).is_zero());
        let b = IntMatrix::from_i64_rows(&[&[1, 0], &[-2, 1], &[1, -2], &[0, 1]]);
        assert_eq!(
            LatticeBasis::from_generators(&k),
            LatticeBasis::from_generators(&b)
        );
    }

    #[test]
    fn index_of_weight_rows() {
        let at = IntMatrix::from_i64_rows(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]);
        assert_eq!(lattice_index(&at).unwrap(), BigInt::from(3));
        assert_eq!(int_rank(&at), 2);
        let sat = saturation(&at);
        assert_eq!(lattice_index(&sat).unwrap(), BigInt::one());
    }

    #[test]
    fn index_of_nonsaturated_column() {
        let b = IntMatrix::from_i64_rows(&[&[-2, -1], &[3, 0], &[0, 3], &[-1, -2]]);
        let bj = b.select_rows(&[1, 2]);
        assert_eq!(lattice_index(&bj).unwrap(), BigInt::from(9));
        let g = IntMatrix::from_i64_rows(&[&[2], &[0], &[4]]);
        assert_eq!(lattice_index(&g).unwrap(), BigInt::from(2));
    }

    #[test]
    fn coordinates_and_membership() {
        let b = IntMatrix::from_i64_rows(&[&[1, 0], &[-2, 1], &[1, -2], &[0, 1]]);
        let l = LatticeBasis::from_generators(&b);
        let v = bi(&[2, -3, 0, 1]);
        let c = l.coords(&v).unwrap();
        assert_eq!(l.point(&c), v);
        assert!(!l.contains(&bi(&[1, 0, 0, 0])));
        assert_eq!(l.word_length(&bi(&[0, 0, 0, 0])), Some(BigInt::zero()));
    }

    #[test]
    fn empty_shapes() {
        let z = IntMatrix::zeros(0, 3);
        assert_eq!(kernel_basis(&z), IntMatrix::identity(3));
        let none = IntMatrix::zeros(3, 0);
        assert_eq!(LatticeBasis::from_generators(&none).rank(), 0);
        assert_eq!(lattice_index(&none).unwrap(), BigInt::one());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
