//! Differential operators acting on Puiseux series.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::horn::{HornOperator, ThetaPoly};
use super::puiseux::{Exponent, PuiseuxSeries};
use super::scalar::Scalar;
use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffOp {
    /// `∂^{u_plus} - λ ∂^{u_minus}`.
    Binomial {
        u_plus: Vec<u64>,
        u_minus: Vec<u64>,
        lambda: Scalar,
    },
    /// `Σ_j row_j x_j ∂_j - beta`.
    Euler { row: Vec<Rat>, beta: Scalar },
    /// `q(θ) - z_k p(θ)` with `θ_j = z_j ∂_j`.
    Theta {
        q: ThetaPoly,
        p: ThetaPoly,
        k: usize,
    },
}

impl DiffOp {
    /// The binomial `∂^{u+} - ∂^{u-}` of an integer vector `u`.
    pub fn binomial_of(u: &[BigInt]) -> DiffOp {
        let part = |sign: i32| -> Vec<u64> {
            u.iter()
                .map(|x| {
                    let y = if sign > 0 { x.clone() } else { -x.clone() };
                    if y > BigInt::zero() {
                        y.try_into().expect("exponent fits in u64")
                    } else {
                        0
                    }
                })
                .collect()
        };
        DiffOp::Binomial {
            u_plus: part(1),
            u_minus: part(-1),
            lambda: Scalar::one(),
        }
    }

    pub fn from_horn(op: &HornOperator) -> DiffOp {
        DiffOp::Theta {
            q: op.q.clone(),
            p: op.p.clone(),
            k: op.k,
        }
    }

    /// Total differential order.
    pub fn order(&self) -> u64 {
        match self {
            DiffOp::Binomial {
                u_plus, u_minus, ..
            } => u_plus.iter().sum::<u64>().max(u_minus.iter().sum()),
            DiffOp::Euler { .. } => 1,
            DiffOp::Theta { q, p, .. } => u64::from(q.degree().max(p.degree())),
        }
    }

    /// Exponents of the input terms that contribute to the output term at `e`.
    pub fn sources(&self, e: &[Rat]) -> Vec<Exponent> {
        let add = |u: &[u64]| -> Exponent {
            e.iter()
                .zip(u)
                .map(|(x, &k)| x + Rat::from_integer(k.into()))
                .collect()
        };
        match self {
            DiffOp::Binomial {
                u_plus, u_minus, ..
            } => vec![add(u_plus), add(u_minus)],
            DiffOp::Euler { .. } => vec![e.to_vec()],
            DiffOp::Theta { k, .. } => {
                let mut tail = e.to_vec();
                tail[*k] -= Rat::one();
                vec![e.to_vec(), tail]
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            DiffOp::Binomial {
                u_plus,
                u_minus,
                lambda,
            } => {
                let lam = if *lambda == Scalar::one() {
                    String::new()
                } else {
                    format!("{lambda}*")
                };
                format!("d^{u_plus:?} - {lam}d^{u_minus:?}")
            }
            DiffOp::Euler { row, beta } => {
                let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                format!("E[{}] - {beta}", r.join(","))
            }
            DiffOp::Theta { q, p, k } => format!("({q}) - z{}*({p})", k + 1),
        }
    }
}

/// `w (w-1) ⋯ (w-k+1)`.
pub fn falling(w: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    let mut x = w.clone();
    for _ in 0..k {
        acc *= &x;
        x -= Rat::one();
    }
    acc
}

fn derivative(s: &PuiseuxSeries, u: &[u64], out: &mut PuiseuxSeries, factor: &Scalar) {
    for (e, c) in s.terms() {
        let mut coef = Rat::one();
        let mut ex = e.clone();
        for (j, &k) in u.iter().enumerate() {
            coef *= falling(&e[j], k);
            ex[j] -= Rat::from_integer(k.into());
        }
        if coef.is_zero() {
            continue;
        }
        out.add_term(ex, &c.scale(&coef) * factor);
    }
}

/// Applies `op` term by term. For truncated inputs the output keeps the
/// support lattice, moves the base by the operator's shift and lowers the
/// bound by the operator order; the output is only reliable where every
/// source exponent is exact, which is what verification checks.
pub fn apply_operator(op: &DiffOp, s: &PuiseuxSeries) -> PuiseuxSeries {
    let mut out = PuiseuxSeries::zero(s.nvars());
    let mut shift = vec![Rat::zero(); s.nvars()];
    match op {
        DiffOp::Binomial {
            u_plus,
            u_minus,
            lambda,
        } => {
            derivative(s, u_plus, &mut out, &Scalar::one());
            derivative(s, u_minus, &mut out, &-lambda);
            for (x, &k) in shift.iter_mut().zip(u_plus) {
                *x = -Rat::from_integer(k.into());
            }
        }
        DiffOp::Euler { row, beta } => {
            for (e, c) in s.terms() {
                let w: Rat = row
                    .iter()
                    .zip(e)
                    .fold(Rat::zero(), |acc, (a, x)| acc + a * x);
                let f = &Scalar::from_rat(w) - beta;
                out.add_term(e.clone(), c * &f);
            }
        }
        DiffOp::Theta { q, p, k } => {
            for (e, c) in s.terms() {
                out.add_term(e.clone(), c * &q.eval(e));
                let mut up = e.clone();
                up[*k] += Rat::one();
                out.add_term(up, -(c * &p.eval(e)));
            }
        }
    }
    if let Some(sup) = &s.support {
        out.support = Some(sup.shifted(&shift));
    }
    if let Some(t) = &s.truncation {
        out.truncation = Some(t - BigInt::from(op.order()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter()
            .map(|&(a, b)| Rat::new(a.into(), b.into()))
            .collect()
    }

    #[test]
    fn euler_kills_weighted_monomial() {
        let op = DiffOp::Euler {
            row: q(&[(3, 1), (2, 1), (1, 1), (0, 1)]),
            beta: Scalar::one(),
        };
        let s = PuiseuxSeries::monomial(q(&[(1, 3), (0, 1), (0, 1), (0, 1)]), Scalar::one());
        assert!(apply_operator(&op, &s).is_empty());
    }

    #[test]
    fn binomial_on_polynomial() {
        // (∂1∂3 - ∂2²)(x1 x3) = 1
        let op = DiffOp::Binomial {
            u_plus: vec![1, 0, 1, 0],
            u_minus: vec![0, 2, 0, 0],
            lambda: Scalar::one(),
        };
        let s = PuiseuxSeries::monomial(q(&[(1, 1), (0, 1), (1, 1), (0, 1)]), Scalar::one());
        let out = apply_operator(&op, &s);
        assert_eq!(out.len(), 1);
        assert_eq!(out.coeff(&q(&[(0, 1); 4])), Scalar::one());
    }

    #[test]
    fn theta_operator_on_gauss_head() {
        // θ(θ+c-1) - z(θ+a)(θ+b) on 1 + (ab/c) z leaves no z^0 or z^1 term
        let (a, b, c) = (
            Rat::new(1.into(), 3.into()),
            Rat::new(2.into(), 5.into()),
            Rat::new(3.into(), 7.into()),
        );
        let lin = |k: Rat| {
            let mut p = ThetaPoly::constant(1, Scalar::from_rat(k));
            p.add_term(vec![1], Scalar::one());
            p
        };
        let qp = lin(Rat::zero()).mul(&lin(&c - Rat::one()));
        let pp = lin(a.clone()).mul(&lin(b.clone()));
        let op = DiffOp::Theta { q: qp, p: pp, k: 0 };
        let mut s = PuiseuxSeries::monomial(q(&[(0, 1)]), Scalar::one());
        s.add_term(vec![Rat::one()], Scalar::from_rat(&a * &b / &c));
        let out = apply_operator(&op, &s);
        assert!(out.coeff(&q(&[(0, 1)])).is_zero());
        assert!(out.coeff(&q(&[(1, 1)])).is_zero());
        assert!(!out.coeff(&q(&[(2, 1)])).is_zero());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(
            falling(&Rat::from_integer(5.into()), 2),
            Rat::from_integer(20.into())
        );
        assert!(falling(&Rat::from_integer(1.into()), 2).is_zero());
        assert_eq!(falling(&Rat::new(1.into(), 2.into()), 0), Rat::one());
    }
}
