use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero invariant factors, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut rank = 0;
    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&d, t) else {
                return SmithForm { u, d, v, rank };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let p = d.get(t, t).clone();
            for i in t + 1..m {
                let q = d.get(i, t).div_floor(&p);
                d.add_row_multiple(i, t, &-&q);
                u.add_row_multiple(i, t, &-&q);
            }
            for j in t + 1..n {
                let q = d.get(t, j).div_floor(&p);
                d.add_col_multiple(j, t, &-&q);
                v.add_col_multiple(j, t, &-&q);
            }
            let dirty = (t + 1..m).any(|i| !d.get(i, t).is_zero())
                || (t + 1..n).any(|j| !d.get(t, j).is_zero());
            if dirty {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        rank = t + 1;
    }
    SmithForm { u, d, v, rank }
}

fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|b| ax < b.2) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert_eq!(s.u.det().unwrap().abs(), BigInt::from(1));
        assert_eq!(s.v.det().unwrap().abs(), BigInt::from(1));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn erdelyi_weights() {
        let a = IntMatrix::from_i64_rows(&[&[3, 2, 1, 0], &[0, 1, 2, 3]]);
        let s = check(&a);
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(3)]
        );
    }

    #[test]
    fn needs_divisibility_fix() {
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 3]]);
        let s = check(&a);
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn rank_deficient_and_empty() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[-1, -1], &[1, 0], &[0, 1]]);
        assert_eq!(check(&a).rank, 2);
        let z = IntMatrix::zeros(0, 3);
        assert_eq!(check(&z).rank, 0);
        let b = IntMatrix::from_i64_rows(&[&[2, 4], &[1, 2]]);
        assert_eq!(check(&b).rank, 1);
    }
}
