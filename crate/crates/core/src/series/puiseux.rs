//! Finite sums of Puiseux monomials with rational exponents and exact
//! coefficients, optionally describing a truncation of an infinite series.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::linalg::LatticeBasis;
use crate::Rat;

pub type Exponent = Vec<Rat>;

/// The set `base + offsets + lattice` on which a series is supported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Support {
    pub base: Exponent,
    pub lattice: LatticeBasis,
    pub offsets: Vec<Exponent>,
}

impl Support {
    /// Support `base + lattice`.
    pub fn coset(base: Exponent, lattice: LatticeBasis) -> Self {
        let zero = vec![Rat::from_integer(0.into()); base.len()];
        Support {
            base,
            lattice,
            offsets: vec![zero],
        }
    }

    /// Word lengths of `s - base - o` for each offset `o` with that
    /// difference in the lattice.
    pub fn word_lengths(&self, s: &[Rat]) -> Vec<BigInt> {
        self.offsets
            .iter()
            .filter_map(|o| {
                let diff: Option<Vec<BigInt>> = s
                    .iter()
                    .zip(&self.base)
                    .zip(o)
                    .map(|((x, b), y)| {
                        let t = x - b - y;
                        t.is_integer().then(|| t.to_integer())
                    })
                    .collect();
                self.lattice.word_length(&diff?)
            })
            .collect()
    }

    pub fn contains(&self, s: &[Rat]) -> bool {
        !self.word_lengths(s).is_empty()
    }

    /// Same support translated by `shift`.
    pub fn shifted(&self, shift: &[Rat]) -> Support {
        Support {
            base: self.base.iter().zip(shift).map(|(a, b)| a + b).collect(),
            lattice: self.lattice.clone(),
            offsets: self.offsets.clone(),
        }
    }
}

/// A finite Puiseux polynomial in `nvars` variables. When `truncation` is set
/// the polynomial is the part of an infinite series on `support` whose
/// lattice word length is at most the bound; coefficients at points farther
/// out are missing, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSeries {
    nvars: usize,
    terms: BTreeMap<Exponent, Scalar>,
    pub support: Option<Support>,
    pub truncation: Option<BigInt>,
}

impl PuiseuxSeries {
    pub fn zero(nvars: usize) -> Self {
        PuiseuxSeries {
            nvars,
            terms: BTreeMap::new(),
            support: None,
            truncation: None,
        }
    }

    pub fn monomial(exponent: Exponent, coeff: Scalar) -> Self {
        let mut s = Self::zero(exponent.len());
        s.add_term(exponent, coeff);
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[Rat]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c x^e`, dropping the term if the coefficient cancels.
    pub fn add_term(&mut self, e: Exponent, c: Scalar) {
        assert_eq!(e.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                let sum = &*x + &c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *x = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn with_support(mut self, support: Support) -> Self {
        self.support = Some(support);
        self
    }

    /// Marks the series as truncated at lattice word length `bound` of its
    /// support.
    pub fn truncated(mut self, bound: BigInt) -> Result<Self> {
        if self.support.is_none() {
            return Err(Error::Internal(
                "truncation needs a declared support".into(),
            ));
        }
        self.truncation = Some(bound);
        Ok(self)
    }

    /// True if the coefficient at `s` is the coefficient of the untruncated
    /// series: either nothing is truncated, or every way of reaching `s` from
    /// the support base stays within the bound. Points off the support are
    /// exact zeros.
    pub fn is_exact_at(&self, s: &[Rat]) -> bool {
        match (&self.truncation, &self.support) {
            (Some(t), Some(sup)) => sup.word_lengths(s).iter().all(|w| w <= t),
            _ => true,
        }
    }

    /// Every term lies on the declared support (vacuous without one).
    pub fn respects_support(&self) -> bool {
        match &self.support {
            Some(sup) => self.terms.keys().all(|e| sup.contains(e)),
            None => true,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = PuiseuxSeries {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// Sum of two series; metadata is dropped.
    pub fn plus(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != Rat::from_integer(0.into()))
                    .map(|(i, x)| format!("x{}^({x})", i + 1))
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
