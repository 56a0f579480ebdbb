//! Polynomials in the Euler derivations `θ_k = z_k ∂_k` and the classical
//! Horn operators `q_k(θ) - z_k p_k(θ)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::Rat;

/// Polynomial in `θ_1..θ_m` with exact coefficients, keyed by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl ThetaPoly {
    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = ThetaPoly {
            nvars,
            terms: BTreeMap::new(),
        };
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.terms
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        assert_eq!(e.len(), self.nvars, "theta exponent length mismatch");
        if c.is_zero() {
            return;
        }
        let sum = &self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero) + &c;
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = ThetaPoly {
            nvars: self.nvars,
            terms: BTreeMap::new(),
        };
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Value at `θ = alpha`.
    pub fn eval(&self, alpha: &[Rat]) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut m = Rat::from_integer(1.into());
            for (a, &k) in alpha.iter().zip(e) {
                for _ in 0..k {
                    m *= a;
                }
            }
            acc = &acc + &c.scale(&m);
        }
        acc
    }
}

impl fmt::Display for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("t{}", i + 1)
                        } else {
                            format!("t{}^{k}", i + 1)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `coeffs · θ + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<BigInt>,
    pub constant: Scalar,
}

impl LinearForm {
    pub fn to_poly(&self) -> ThetaPoly {
        let m = self.coeffs.len();
        let mut p = ThetaPoly::constant(m, self.constant.clone());
        for (i, b) in self.coeffs.iter().enumerate() {
            let mut e = vec![0; m];
            e[i] = 1;
            p.add_term(e, Scalar::from_rat(Rat::from_integer(b.clone())));
        }
        p
    }
}

/// The operator `q(θ) - z_k p(θ)` in factored and expanded form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornOperator {
    pub k: usize,
    pub q_factors: Vec<LinearForm>,
    pub p_factors: Vec<LinearForm>,
    pub q: ThetaPoly,
    pub p: ThetaPoly,
}

/// For each column `k` of `b`, the operator with
/// `q_k = ∏_{b_jk > 0} ∏_{ℓ < b_jk} (b_j·θ + c_j - ℓ)` and
/// `p_k = ∏_{b_jk < 0} ∏_{ℓ < |b_jk|} (b_j·θ + c_j - ℓ)`, where `b_j` is row `j`.
pub fn horn_classical_operators(b: &IntMatrix, c: &[Scalar]) -> Result<Vec<HornOperator>> {
    let (n, m) = (b.rows(), b.cols());
    if c.len() != n {
        return Err(Error::Dimension(format!(
            "c has {} entries, expected {n}",
            c.len()
        )));
    }
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let (mut qf, mut pf) = (Vec::new(), Vec::new());
        for (j, cj) in c.iter().enumerate() {
            let bjk = b.get(j, k);
            if bjk.is_zero() {
                continue;
            }
            let reps = bjk.abs().to_u32().ok_or(Error::Overflow)?;
            for l in 0..reps {
                let form = LinearForm {
                    coeffs: b.row(j).to_vec(),
                    constant: cj - &Scalar::from_int(l as i64),
                };
                if bjk.is_positive() {
                    qf.push(form);
                } else {
                    pf.push(form);
                }
            }
        }
        let expand = |fs: &[LinearForm]| {
            fs.iter()
                .fold(ThetaPoly::one(m), |acc, f| acc.mul(&f.to_poly()))
        };
        out.push(HornOperator {
            k,
            q: expand(&qf),
            p: expand(&pf),
            q_factors: qf,
            p_factors: pf,
        });
    }
    Ok(out)
}
