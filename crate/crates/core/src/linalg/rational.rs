//! Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::Rat;

/// Reduced row echelon form of a matrix with `ncols` columns, returning the
/// nonzero rows and the pivot column of each.
pub fn rref(rows: &[Vec<Rat>], ncols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rat::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).take(ncols) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let (r, piv) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); ncols];
            x[f] = Rat::one();
            for (row, &p) in r.iter().zip(&piv) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// Some solution of `rows · x = b`, with free variables set to zero, or
/// `None` when the system is inconsistent.
pub fn solve_any(rows: &[Vec<Rat>], ncols: usize, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(rows.len(), b.len(), "right-hand side length mismatch");
    let aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(b)
        .map(|(r, y)| {
            let mut r = r.clone();
            r.push(y.clone());
            r
        })
        .collect();
    let (r, piv) = rref(&aug, ncols + 1);
    if piv.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &p) in r.iter().zip(&piv) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let aug: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let (r, piv) = rref(&aug, 2 * n);
    if piv.len() < n || (n > 0 && piv[n - 1] != n - 1) {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(a: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|r| r.iter().zip(v).fold(Rat::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_integer(x.into())).collect()
    }

    #[test]
    fn nullspace_of_weights() {
        let a = vec![q(&[3, 2, 1, 0]), q(&[0, 1, 2, 3])];
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            assert!(mat_vec(&a, x).iter().all(Zero::is_zero));
        }
        assert_eq!(rank(&a, 4), 2);
    }

    #[test]
    fn inverse_and_solve() {
        let m = vec![q(&[-2, 1]), q(&[1, -2])];
        let inv = inverse(&m).unwrap();
        let x = mat_vec(&inv, &q(&[1, 0]));
        assert_eq!(mat_vec(&m, &x), q(&[1, 0]));
        assert!(inverse(&[q(&[1, 1]), q(&[2, 2])]).is_none());
        assert!(solve_any(&[q(&[1, 1]), q(&[2, 2])], 2, &q(&[1, 3])).is_none());
        assert_eq!(solve_any(&[q(&[1, 1])], 2, &q(&[5])).unwrap(), q(&[5, 0]));
    }
}
