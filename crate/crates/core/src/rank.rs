//! The generic holonomic rank `Σ μ_M · g(B_J) · vol(A_J)` over toral
//! decompositions, and the degree product check for zero column sums.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::decomp::{andean_report, enumerate_decompositions, AndeanReport, Decomposition};
use crate::error::Result;
use crate::geometry::normalized_volume;
use crate::model::HornInput;
use crate::subgraph::bounded_atlas;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub rowset_jbar: Vec<usize>,
    pub mu: usize,
    pub g: BigInt,
    pub vol: BigInt,
    pub product: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankTotal {
    Finite(BigInt),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub total: RankTotal,
    /// One entry per toral decomposition; empty when the rank is infinite.
    pub summands: Vec<Summand>,
    pub generically_holonomic: bool,
    pub andean: AndeanReport,
    /// Integer translates of Andean directions are not computed, so the rank
    /// at a specific parameter on them is not decided.
    pub translates_unknown: bool,
}

impl RankReport {
    pub fn finite_total(&self) -> Option<&BigInt> {
        match &self.total {
            RankTotal::Finite(t) => Some(t),
            RankTotal::Infinite => None,
        }
    }
}

/// Normalized volume of `A_J`, taken as 1 when `A` has no rows.
pub fn volume_of(dec: &Decomposition) -> Result<BigInt> {
    if dec.a_j.rows() == 0 {
        return Ok(BigInt::one());
    }
    Ok(normalized_volume(&dec.a_j)?.value)
}

/// Generic rank of the Horn system of `input`. Infinite when some Andean
/// decomposition has `A_J` of full rank.
pub fn generic_rank(input: &HornInput, cap: usize) -> Result<RankReport> {
    let decomps = enumerate_decompositions(input)?;
    rank_from_decompositions(&decomps, input.d(), cap)
}

pub fn rank_from_decompositions(
    decomps: &[Decomposition],
    d: usize,
    cap: usize,
) -> Result<RankReport> {
    let andean = andean_report(decomps, d);
    let translates_unknown = !andean.directions.is_empty();
    if !andean.generically_holonomic {
        return Ok(RankReport {
            total: RankTotal::Infinite,
            summands: Vec::new(),
            generically_holonomic: false,
            andean,
            translates_unknown,
        });
    }
    let mut summands = Vec::new();
    let mut total = BigInt::zero();
    for dec in decomps.iter().filter(|x| x.is_toral()) {
        let mu = bounded_atlas(&dec.m, cap)?.mu;
        let vol = volume_of(dec)?;
        let product = BigInt::from(mu) * &dec.g * &vol;
        total += &product;
        summands.push(Summand {
            rowset_jbar: dec.rowset_jbar.clone(),
            mu,
            g: dec.g.clone(),
            vol,
            product,
        });
    }
    Ok(RankReport {
        total: RankTotal::Finite(total),
        summands,
        generically_holonomic: true,
        andean,
        translates_unknown,
    })
}

/// When every column of `B` sums to zero and there are no Andean
/// decompositions, the rank equals `∏_k Σ_j max(b_jk, 0)`; otherwise `None`.
pub fn degree_cross_check(input: &HornInput) -> Result<Option<BigInt>> {
    let b = input.b();
    let zero_sums =
        (0..b.cols()).all(|k| (0..b.rows()).map(|j| b.get(j, k)).sum::<BigInt>().is_zero());
    if !zero_sums {
        return Ok(None);
    }
    let decomps = enumerate_decompositions(input)?;
    if decomps.iter().any(|x| !x.is_toral()) {
        return Ok(None);
    }
    let prod = (0..b.cols())
        .map(|k| {
            (0..b.rows())
                .map(|j| b.get(j, k).clone().max(BigInt::zero()))
                .sum::<BigInt>()
        })
        .product();
    Ok(Some(prod))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::subgraph::DEFAULT_CAP;

    #[test]
    fn erdelyi_rank_four() {
        let input = HornInput::new(fixtures::b_erd()).unwrap();
        let r = generic_rank(&input, DEFAULT_CAP).unwrap();
        assert_eq!(r.total, RankTotal::Finite(4.into()));
        let parts: Vec<(Vec<usize>, BigInt)> = r
            .summands
            .iter()
            .map(|s| (s.rowset_jbar.clone(), s.product.clone()))
            .collect();
        assert_eq!(parts, vec![(vec![], 3.into()), (vec![1, 2], 1.into())]);
        assert_eq!(degree_cross_check(&input).unwrap(), Some(4.into()));
    }

    #[test]
    fn mellin_rank_nine() {
        let input = HornInput::new(fixtures::b_mellin()).unwrap();
        let r = generic_rank(&input, DEFAULT_CAP).unwrap();
        assert_eq!(r.total, RankTotal::Finite(9.into()));
        let s = &r.summands[0];
        assert_eq!((s.mu, s.g.clone(), s.vol.clone()), (1, 3.into(), 3.into()));
        assert_eq!(degree_cross_check(&input).unwrap(), Some(9.into()));
    }

    #[test]
    fn himalayan_infinite() {
        let input = HornInput::new(fixtures::b_him()).unwrap();
        let r = generic_rank(&input, DEFAULT_CAP).unwrap();
        assert_eq!(r.total, RankTotal::Infinite);
        assert!(!r.generically_holonomic);
        assert_eq!(degree_cross_check(&input).unwrap(), None);
    }

    #[test]
    fn gauss_rank_two() {
        let input = HornInput::new(fixtures::b_gauss()).unwrap();
        let r = generic_rank(&input, DEFAULT_CAP).unwrap();
        assert_eq!(r.total, RankTotal::Finite(2.into()));
    }

    #[test]
    fn nonholonomic_example_is_generically_finite() {
        let input = HornInput::new(fixtures::b_nh()).unwrap();
        let r = generic_rank(&input, DEFAULT_CAP).unwrap();
        assert!(r.generically_holonomic && r.translates_unknown);
        assert!(r.finite_total().is_some());
    }
}
