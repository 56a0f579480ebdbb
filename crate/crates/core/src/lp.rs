//! Exact feasibility of linear inequality systems by Fourier–Motzkin
//! elimination, with Farkas certificates on infeasibility.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// Outcome of [`feasible`] for the system `A x >= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// A rational point satisfying every inequality.
    Feasible(Vec<Rat>),
    /// Nonnegative multipliers `y` with `yᵀA = 0` and `yᵀb > 0`.
    Infeasible(Vec<Rat>),
}

const MAX_CONSTRAINTS: usize = 20_000;

#[derive(Clone, Debug)]
struct Row {
    coef: Vec<Rat>,
    rhs: Rat,
    mult: Vec<Rat>,
}

/// Decides `A x >= b` over the rationals. `a` has one row per inequality and
/// `nvars` columns.
pub fn feasible(a: &[Vec<Rat>], b: &[Rat], nvars: usize) -> Result<LpOutcome> {
    if a.len() != b.len() || a.iter().any(|r| r.len() != nvars) {
        return Err(Error::Dimension("inequality system shape mismatch".into()));
    }
    let m = a.len();
    let mut rows: Vec<Row> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (r, y))| {
            let mut mult = vec![Rat::zero(); m];
            mult[i] = Rat::from_integer(1.into());
            Row {
                coef: r.clone(),
                rhs: y.clone(),
                mult,
            }
        })
        .collect();
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(nvars);
    for k in (0..nvars).rev() {
        stages.push(rows.clone());
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.coef[k].is_positive() {
                pos.push(r);
            } else if r.coef[k].is_negative() {
                neg.push(r);
            } else {
                keep.push(r);
            }
        }
        if keep.len() + pos.len() * neg.len() > MAX_CONSTRAINTS {
            return Err(Error::TooLarge(format!(
                "elimination produced more than {MAX_CONSTRAINTS} inequalities"
            )));
        }
        for p in &pos {
            for q in &neg {
                let (sp, sq) = (-q.coef[k].clone(), p.coef[k].clone());
                let comb = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
                    x.iter().zip(y).map(|(u, v)| &sp * u + &sq * v).collect()
                };
                let mut coef = comb(&p.coef, &q.coef);
                coef[k] = Rat::zero();
                let row = Row {
                    coef,
                    rhs: &sp * &p.rhs + &sq * &q.rhs,
                    mult: comb(&p.mult, &q.mult),
                };
                if row.coef.iter().all(Zero::is_zero) && !row.rhs.is_positive() {
                    continue;
                }
                keep.push(row);
            }
        }
        rows = keep;
    }
    if let Some(bad) = rows.iter().find(|r| r.rhs.is_positive()) {
        return Ok(LpOutcome::Infeasible(bad.mult.clone()));
    }
    // Back-substitute in the order variables were eliminated, last first.
    let mut x = vec![Rat::zero(); nvars];
    for (stage, k) in stages.iter().rev().zip(0..nvars) {
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for r in stage {
            let c = &r.coef[k];
            if c.is_zero() {
                continue;
            }
            let rest: Rat = (0..k).fold(Rat::zero(), |acc, j| acc + &r.coef[j] * &x[j]);
            let bound = (&r.rhs - rest) / c;
            if c.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        let mut v = Rat::zero();
        if let Some(l) = lo {
            if v < l {
                v = l;
            }
        }
        if let Some(h) = hi {
            if v > h {
                v = h;
            }
        }
        x[k] = v;
    }
    Ok(LpOutcome::Feasible(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_integer(x.into())).collect()
    }

    fn check(a: &[Vec<Rat>], b: &[Rat], n: usize) -> LpOutcome {
        let out = feasible(a, b, n).unwrap();
        match &out {
            LpOutcome::Feasible(x) => {
                for (r, y) in a.iter().zip(b) {
                    let lhs: Rat = r.iter().zip(x).map(|(u, v)| u * v).sum();
                    assert!(lhs >= *y);
                }
            }
            LpOutcome::Infeasible(y) => {
                assert!(y.iter().all(|t| !t.is_negative()));
                for j in 0..n {
                    let s: Rat = a.iter().zip(y).map(|(r, t)| &r[j] * t).sum();
                    assert!(s.is_zero());
                }
                let s: Rat = b.iter().zip(y).map(|(u, t)| u * t).sum();
                assert!(s.is_positive());
            }
        }
        out
    }

    #[test]
    fn box_is_feasible() {
        let a = vec![q(&[1, 0]), q(&[-1, 0]), q(&[0, 1]), q(&[0, -1]), q(&[1, 1])];
        let b = q(&[1, -3, -2, -1, 2]);
        assert!(matches!(check(&a, &b, 2), LpOutcome::Feasible(_)));
    }

    #[test]
    fn contradiction_has_certificate() {
        let a = vec![q(&[1, 1]), q(&[-1, 0]), q(&[0, -1])];
        let b = q(&[1, 0, 0]);
        assert!(matches!(check(&a, &b, 2), LpOutcome::Infeasible(_)));
    }

    #[test]
    fn zero_variables() {
        assert!(matches!(
            check(&[q(&[])], &q(&[1]), 0),
            LpOutcome::Infeasible(_)
        ));
        assert!(matches!(
            check(&[q(&[])], &q(&[0]), 0),
            LpOutcome::Feasible(_)
        ));
    }
}
