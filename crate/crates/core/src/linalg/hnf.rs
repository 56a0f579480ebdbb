use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form of the row lattice of `a`: echelon form with
/// positive pivots and entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped, so the result has `rank(a)` rows.
pub fn row_hnf(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    let (m, n) = (h.rows(), h.cols());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&x, &y| h.get(x, c).abs().cmp(&h.get(y, c).abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            let pv = h.get(r, c).clone();
            let mut clean = true;
            for i in r + 1..m {
                let q = h.get(i, c).div_floor(&pv);
                h.add_row_multiple(i, r, &-&q);
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
        }
        let pv = h.get(r, c).clone();
        for i in 0..r {
            let q = h.get(i, c).div_floor(&pv);
            h.add_row_multiple(i, r, &-&q);
        }
        r += 1;
    }
    h.select_rows(&(0..r).collect::<Vec<_>>())
}

/// Column-style Hermite normal form: the transpose of [`row_hnf`] of the
/// transpose. The columns form the canonical basis of the column lattice.
pub fn column_hnf(a: &IntMatrix) -> IntMatrix {
    row_hnf(&a.transpose()).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_above_pivots() {
        let a = IntMatrix::from_i64_rows(&[&[3, 2, 1, 0], &[0, 1, 2, 3]]);
        assert_eq!(
            row_hnf(&a),
            IntMatrix::from_i64_rows(&[&[3, 0, -3, -6], &[0, 1, 2, 3]])
        );
    }

    #[test]
    fn canonical_for_equal_lattices() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let b = IntMatrix::from_i64_rows(&[&[1, 2, 3, 4], &[-1, -1, -1, -1]]);
        assert_eq!(row_hnf(&a), row_hnf(&b));
        assert_eq!(
            row_hnf(&a),
            IntMatrix::from_i64_rows(&[&[1, 0, -1, -2], &[0, 1, 2, 3]])
        );
    }

    #[test]
    fn drops_zero_rows() {
        let a = IntMatrix::from_i64_rows(&[&[2, 4], &[1, 2], &[0, 0]]);
        assert_eq!(row_hnf(&a), IntMatrix::from_i64_rows(&[&[1, 2]]));
        assert_eq!(row_hnf(&IntMatrix::zeros(2, 2)).rows(), 0);
    }
}
