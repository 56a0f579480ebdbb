//! Construction of truncated series solutions: the polynomials `G_γ` on the
//! bounded subgraphs of `M`, Gamma series for `A_J`, and their assembly.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ops::falling;
use super::puiseux::{Exponent, PuiseuxSeries, Support};
use super::scalar::Scalar;
use crate::decomp::{enumerate_decompositions, Decomposition};
use crate::error::{Error, Result};
use crate::geometry::{
    exponent_choices, normalized_volume, shifted_beta, very_generic_check, ExponentChoice,
};
use crate::linalg::rational::{inverse, mat_vec};
use crate::linalg::{smith_normal_form, IntMatrix, LatticeBasis};
use crate::model::HornInput;
use crate::rank::{rank_from_decompositions, RankTotal};
use crate::subgraph::{bounded_atlas, columns_i64, component_of, Component};
use crate::Rat;

fn rat_i(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

fn falling_int(u: &[i64], k: &[i64]) -> Rat {
    u.iter().zip(k).fold(Rat::one(), |acc, (&a, &b)| {
        acc * falling(&rat_i(a), b as u64)
    })
}

/// `λ_{u+step} / λ_u` for coefficients of a polynomial killed by
/// `∂^{step+} - ∂^{step-}`, with `u` and `u + step` in `N^q`.
pub fn edge_coefficient_ratio(u: &[i64], step: &[i64]) -> Rat {
    let minus: Vec<i64> = step.iter().map(|&x| (-x).max(0)).collect();
    let plus: Vec<i64> = step.iter().map(|&x| x.max(0)).collect();
    let target: Vec<i64> = u.iter().zip(step).map(|(a, b)| a + b).collect();
    falling_int(u, &minus) / falling_int(&target, &plus)
}

/// The polynomial `Σ λ_u x^u` over a bounded component, with `λ_γ = 1`,
/// annihilated by `∂^{w+} - ∂^{w-}` for every column `w` of `M`.
/// Coefficients are propagated breadth first from `γ`.
pub fn g_gamma(m: &IntMatrix, gamma: &[i64], component: &Component) -> Result<PuiseuxSeries> {
    if !component.bounded {
        return Err(Error::UnboundedComponent(gamma.to_vec()));
    }
    if !component.contains(gamma) {
        return Err(Error::Dimension(
            "gamma is not in the given component".into(),
        ));
    }
    let steps = columns_i64(m)?;
    let mut lambda: BTreeMap<Vec<i64>, Rat> = BTreeMap::from([(gamma.to_vec(), Rat::one())]);
    let mut queue = VecDeque::from([gamma.to_vec()]);
    while let Some(u) = queue.pop_front() {
        let lu = lambda[&u].clone();
        for s in &steps {
            for sign in [1i64, -1] {
                let step: Vec<i64> = s.iter().map(|x| sign * x).collect();
                let v: Vec<i64> = u.iter().zip(&step).map(|(a, b)| a + b).collect();
                if v.iter().any(|&x| x < 0) || lambda.contains_key(&v) {
                    continue;
                }
                if !component.contains(&v) {
                    return Err(Error::Internal(
                        "component is not closed under steps".into(),
                    ));
                }
                lambda.insert(v.clone(), &lu * edge_coefficient_ratio(&u, &step));
                queue.push_back(v);
            }
        }
    }
    let mut out = PuiseuxSeries::zero(gamma.len());
    for (u, l) in lambda {
        out.add_term(u.into_iter().map(rat_i).collect(), Scalar::from_rat(l));
    }
    Ok(out)
}

/// Applies `∂^{-w}`: integrates `w_j` times in `x_j` where `w_j > 0` and
/// differentiates `-w_j` times where `w_j < 0`. Fails on a vanishing
/// integration denominator.
pub fn antiderivative_shift(s: &PuiseuxSeries, w: &[BigInt]) -> Result<PuiseuxSeries> {
    if w.len() != s.nvars() {
        return Err(Error::Dimension(
            "shift length differs from number of variables".into(),
        ));
    }
    let wi: Vec<i64> = w
        .iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    let mut out = PuiseuxSeries::zero(s.nvars());
    'terms: for (e, c) in s.terms() {
        let mut coef = Rat::one();
        let mut ex = e.clone();
        for (j, &k) in wi.iter().enumerate() {
            if k >= 0 {
                let mut den = Rat::one();
                for i in 1..=k {
                    den *= &e[j] + rat_i(i);
                }
                if den.is_zero() {
                    return Err(Error::Resonance(format!(
                        "integrating x{}^({}) hits a zero denominator",
                        j + 1,
                        e[j]
                    )));
                }
                coef /= den;
            } else {
                coef *= falling(&e[j], (-k) as u64);
                if coef.is_zero() {
                    continue 'terms;
                }
            }
            ex[j] += rat_i(k);
        }
        out.add_term(ex, c.scale(&coef));
    }
    let shift: Vec<Rat> = wi.iter().map(|&k| rat_i(k)).collect();
    out.support = s.support.as_ref().map(|sup| sup.shifted(&shift));
    out.truncation = s.truncation.clone();
    Ok(out)
}

/// A character of `L / Z B_J`, evaluated through a Smith form of the
/// coordinates of `B_J` in the basis of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    /// Cyclotomic order `N` the values live in.
    pub field_root: u32,
    /// Exponents `t_i` with `0 <= t_i < d_i`.
    pub t: Vec<BigInt>,
    moduli: Vec<BigInt>,
    u: IntMatrix,
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.t.iter().all(Zero::is_zero)
    }

    /// Value on the lattice vector with the given coordinates in `L`.
    pub fn eval(&self, coords: &[BigInt]) -> Scalar {
        if self.is_trivial() {
            return Scalar::one();
        }
        let k = self.u.mul_vec(coords);
        let n = BigInt::from(self.field_root);
        let mut e = BigInt::zero();
        for ((ti, di), ki) in self.t.iter().zip(&self.moduli).zip(&k) {
            e += ti * ki * (&n / di);
        }
        let e = e.mod_floor(&n).to_i64().expect("reduced exponent fits");
        Scalar::root_of_unity(self.field_root, e)
    }
}

/// Characters of `L / Z B_J` that were materialized, plus how many copies of
/// each emitted series the unmaterialized ones stand for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSet {
    pub characters: Vec<Character>,
    pub multiplicity: BigInt,
}

/// All `g = |L / Z B_J|` characters when their values lie in `Q(ζ_N)`; only
/// the trivial one (with multiplicity `g`) when `N = 1`.
pub fn characters(l: &LatticeBasis, b_j: &IntMatrix, field_root: u32) -> Result<CharacterSet> {
    let r = l.rank();
    let coords: Vec<Vec<BigInt>> = b_j
        .column_vecs()
        .iter()
        .map(|c| {
            l.coords(c)
                .ok_or_else(|| Error::Internal("B_J column outside L".into()))
        })
        .collect::<Result<_>>()?;
    let c = IntMatrix::from_columns(r, &coords)?;
    let snf = smith_normal_form(&c);
    if snf.rank < r {
        return Err(Error::Degenerate("Z B_J has infinite index in L".into()));
    }
    let moduli: Vec<BigInt> = snf.invariant_factors();
    let g: BigInt = moduli.iter().product();
    let exponent = moduli.last().cloned().unwrap_or_else(BigInt::one);
    let trivial = Character {
        field_root: 1,
        t: vec![BigInt::zero(); r],
        moduli: moduli.clone(),
        u: snf.u.clone(),
    };
    if exponent.is_one() {
        return Ok(CharacterSet {
            characters: vec![trivial],
            multiplicity: BigInt::one(),
        });
    }
    if field_root == 1 {
        return Ok(CharacterSet {
            characters: vec![trivial],
            multiplicity: g,
        });
    }
    if !BigInt::from(field_root).is_multiple_of(&exponent) {
        return Err(Error::Field(format!(
            "character values need roots of unity of order {exponent}, which Q(ζ_{field_root}) lacks"
        )));
    }
    let mut ts: Vec<Vec<BigInt>> = vec![Vec::new()];
    for d in &moduli {
        let bound = d.to_u64().ok_or(Error::Overflow)?;
        ts = ts
            .into_iter()
            .flat_map(|t| {
                (0..bound).map(move |x| {
                    let mut t = t.clone();
                    t.push(BigInt::from(x));
                    t
                })
            })
            .collect();
    }
    let characters = ts
        .into_iter()
        .map(|t| Character {
            field_root,
            t,
            moduli: moduli.clone(),
            u: snf.u.clone(),
        })
        .collect();
    Ok(CharacterSet {
        characters,
        multiplicity: BigInt::one(),
    })
}

/// Coordinate vectors in `Z^r` of 1-norm at most `t`.
fn ball(r: usize, t: u64) -> Vec<Vec<BigInt>> {
    fn rec(r: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<BigInt>>) {
        if prefix.len() == r {
            out.push(prefix.iter().map(|&x| BigInt::from(x)).collect());
            return;
        }
        for x in -budget..=budget {
            prefix.push(x);
            rec(r, budget - x.abs(), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, t as i64, &mut Vec::with_capacity(r), &mut out);
    out
}

/// The Gamma series `Σ_{u ∈ L} c_u x^{v+u}` with
/// `c_u = ∏_{u_j<0} [v_j]_{-u_j} / ∏_{u_j>0} (v_j+1)⋯(v_j+u_j)`, where
/// `[w]_k` is the falling factorial, truncated to word length `t` in the
/// canonical basis of `L`. Terms with a vanishing numerator are absent. An
/// optional character multiplies `c_u` by its value at `u`.
pub fn gamma_series(
    a_j: &IntMatrix,
    l: &LatticeBasis,
    v: &[Rat],
    t: u64,
    twist: Option<&Character>,
) -> Result<PuiseuxSeries> {
    let n = v.len();
    if a_j.cols() != n || l.ambient() != n {
        return Err(Error::Dimension(
            "Gamma series data have inconsistent sizes".into(),
        ));
    }
    if !(a_j * l.basis()).is_zero() {
        return Err(Error::Dimension(
            "lattice is not in the kernel of A_J".into(),
        ));
    }
    let mut out = PuiseuxSeries::zero(n);
    for coords in ball(l.rank(), t) {
        let u = l.point(&coords);
        let mut num = Rat::one();
        let mut den = Rat::one();
        for (j, uj) in u.iter().enumerate() {
            let k = uj.abs().to_u64().ok_or(Error::Overflow)?;
            if uj.is_negative() {
                num *= falling(&v[j], k);
            } else {
                for i in 1..=k {
                    den *= &v[j] + Rat::from_integer(i.into());
                }
            }
        }
        if num.is_zero() {
            continue;
        }
        if den.is_zero() {
            let ex: Vec<String> = u.iter().map(|x| x.to_string()).collect();
            return Err(Error::Resonance(format!(
                "Gamma series denominator vanishes at lattice offset ({})",
                ex.join(",")
            )));
        }
        let mut c = Scalar::from_rat(num / den);
        if let Some(ch) = twist {
            c = &c * &ch.eval(&coords);
        }
        let e: Exponent = v
            .iter()
            .zip(&u)
            .map(|(a, b)| a + Rat::from_integer(b.clone()))
            .collect();
        out.add_term(e, c);
    }
    out = out.with_support(Support::coset(v.to_vec(), l.clone()));
    out.truncated(BigInt::from(t))
}

fn embed_lattice(l: &LatticeBasis, positions: &[usize], n: usize) -> Result<LatticeBasis> {
    let cols: Vec<Vec<BigInt>> = l
        .basis()
        .column_vecs()
        .iter()
        .map(|c| {
            let mut full = vec![BigInt::zero(); n];
            for (x, &p) in c.iter().zip(positions) {
                full[p] = x.clone();
            }
            full
        })
        .collect();
    LatticeBasis::from_vectors(n, &cols)
}

/// `x_J̄^γ Σ_u λ_u x_J̄^{u-γ} ∂_J^{-N v_u}(f)` with `v_u = M^{-1}(u - γ)`,
/// summing over the terms `λ_u x^u` of `G`. The result is supported on the
/// base of `f` (on `J`) and `γ` (on `J̄`), plus the lattice of `f`, plus one
/// offset `(N v_u, u - γ)` per term of `G`.
pub fn assemble_f(
    dec: &Decomposition,
    gamma: &[i64],
    g: &PuiseuxSeries,
    f: &PuiseuxSeries,
) -> Result<PuiseuxSeries> {
    let n = dec.j.len() + dec.q;
    if f.nvars() != dec.j.len() || g.nvars() != dec.q || gamma.len() != dec.q {
        return Err(Error::Dimension(
            "series sizes do not match the decomposition".into(),
        ));
    }
    let place = |on_j: &[Rat], on_jbar: &[Rat]| -> Exponent {
        let mut e = vec![Rat::zero(); n];
        for (x, &p) in on_j.iter().zip(&dec.j) {
            e[p] = x.clone();
        }
        for (x, &p) in on_jbar.iter().zip(&dec.rowset_jbar) {
            e[p] = x.clone();
        }
        e
    };
    let m_inv = if dec.q > 0 {
        inverse(&dec.m.to_rat_rows()).ok_or_else(|| Error::Degenerate("M is singular".into()))?
    } else {
        Vec::new()
    };
    let gam: Vec<Rat> = gamma.iter().map(|&x| rat_i(x)).collect();
    let mut out = PuiseuxSeries::zero(n);
    let mut offsets = Vec::new();
    for (u, lam) in g.terms() {
        let diff: Vec<Rat> = u.iter().zip(&gam).map(|(a, b)| a - b).collect();
        let v = mat_vec(&m_inv, &diff);
        if !v.iter().all(Rat::is_integer) {
            return Err(Error::Internal(
                "subgraph point differs from gamma by a non-lattice step".into(),
            ));
        }
        let v: Vec<Rat> = v;
        let w: Vec<BigInt> = dec
            .n
            .mul_rat_vec(&v)
            .iter()
            .map(|x| x.to_integer())
            .collect();
        let shifted = antiderivative_shift(f, &w)?;
        for (e, c) in shifted.terms() {
            out.add_term(place(e, u), c * lam);
        }
        let wr: Vec<Rat> = w.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let f_offsets = f
            .support
            .as_ref()
            .map(|s| s.offsets.clone())
            .unwrap_or_else(|| vec![vec![Rat::zero(); dec.j.len()]]);
        for o in f_offsets {
            let on_j: Vec<Rat> = o.iter().zip(&wr).map(|(a, b)| a + b).collect();
            offsets.push(place(&on_j, &diff));
        }
    }
    if let Some(sup) = &f.support {
        let lattice = embed_lattice(&sup.lattice, &dec.j, n)?;
        out.support = Some(Support {
            base: place(&sup.base, &gam),
            lattice,
            offsets,
        });
    }
    out.truncation = f.truncation.clone();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Lattice word-length bound for the Gamma series.
    pub truncation: u64,
    /// Cyclotomic order `N` available for character values.
    pub field_root: u32,
    /// Level cap for subgraph atlases.
    pub cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            truncation: 6,
            field_root: 1,
            cap: crate::subgraph::DEFAULT_CAP,
        }
    }
}

/// One emitted basis element with the data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionEntry {
    pub rowset_jbar: Vec<usize>,
    pub gamma: Vec<i64>,
    /// Simplex of the triangulation of `A_J`, as columns of `A`.
    pub simplex: Vec<usize>,
    /// Exponent of the Gamma series on `J`, placed in all `n` coordinates
    /// (zero on `J̄`).
    pub v: Vec<Rat>,
    /// Character exponents, when characters were materialized.
    pub character: Option<Vec<BigInt>>,
    /// Number of basis elements this entry stands for.
    pub multiplicity: BigInt,
    pub series: PuiseuxSeries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionBasis {
    pub entries: Vec<SolutionEntry>,
    /// The generic rank.
    pub rank: BigInt,
    /// Sum of multiplicities; equals `rank`.
    pub represented: BigInt,
}

/// A basis of truncated series solutions at a very generic `beta`: for each
/// toral decomposition, each representative `γ`, each exponent choice for
/// `A_J` at `β - A_J̄ γ`, and each character, the assembled series.
pub fn solution_basis(
    input: &HornInput,
    beta: &[Rat],
    opts: SolveOptions,
) -> Result<SolutionBasis> {
    input.check_beta(beta)?;
    let decomps = enumerate_decompositions(input)?;
    let report = rank_from_decompositions(&decomps, input.d(), opts.cap)?;
    let rank = match report.total {
        RankTotal::Finite(t) => t,
        RankTotal::Infinite => return Err(Error::InfiniteRank),
    };
    let mut problems = Vec::new();
    let mut atlases = Vec::new();
    for dec in decomps.iter().filter(|x| x.is_toral()) {
        let atlas = bounded_atlas(&dec.m, opts.cap)?;
        if input.d() > 0 {
            for v in very_generic_check(beta, dec, &atlas)?.violations {
                problems.push(format!(
                    "rows {:?}, gamma {:?}, facet {:?}: support function value {}",
                    one_based(&dec.rowset_jbar),
                    v.gamma,
                    one_based(&v.facet.iter().map(|&i| dec.j[i]).collect::<Vec<_>>()),
                    v.value
                ));
            }
        }
        atlases.push((dec, atlas));
    }
    if !problems.is_empty() {
        return Err(Error::NotVeryGeneric(problems.join("; ")));
    }
    // Each simplex coordinate of an exponent must be non-integral, otherwise
    // different simplices can produce the same series.
    let mut plans = Vec::new();
    for (dec, atlas) in &atlases {
        for gamma in &atlas.reps {
            let bp = shifted_beta(beta, &dec.a_jbar, gamma);
            let choices = choices_for(dec, &bp)?;
            for c in &choices {
                if let Some(&j) = c.simplex.iter().find(|&&j| c.v[j].is_integer()) {
                    problems.push(format!(
                        "rows {:?}, gamma {:?}: exponent {} on column {} of simplex {:?} is an integer",
                        one_based(&dec.rowset_jbar),
                        gamma,
                        c.v[j],
                        dec.j[j] + 1,
                        c.simplex.iter().map(|&i| dec.j[i] + 1).collect::<Vec<_>>()
                    ));
                }
            }
            plans.push((*dec, gamma, choices));
        }
    }
    if !problems.is_empty() {
        return Err(Error::NotVeryGeneric(problems.join("; ")));
    }
    let mut chars_of = Vec::new();
    for (dec, _) in &atlases {
        chars_of.push(characters(&dec.l_basis, &dec.b_j, opts.field_root)?);
    }
    let mut entries = Vec::new();
    for (dec, gamma, choices) in plans {
        let pos = atlases
            .iter()
            .position(|(d, _)| d.rowset_jbar == dec.rowset_jbar)
            .expect("planned decomposition");
        let chars = &chars_of[pos];
        let g = g_gamma(&dec.m, gamma, &component_of(&dec.m, gamma)?)?;
        for choice in choices {
            for ch in &chars.characters {
                let twist = (!ch.is_trivial()).then_some(ch);
                let f = gamma_series(&dec.a_j, &dec.l_basis, &choice.v, opts.truncation, twist)?;
                let series = assemble_f(dec, gamma, &g, &f)?;
                let mut v = vec![Rat::zero(); input.n()];
                for (x, &p) in choice.v.iter().zip(&dec.j) {
                    v[p] = x.clone();
                }
                entries.push(SolutionEntry {
                    rowset_jbar: dec.rowset_jbar.clone(),
                    gamma: gamma.clone(),
                    simplex: choice.simplex.iter().map(|&i| dec.j[i]).collect(),
                    v,
                    character: (opts.field_root > 1 && chars.multiplicity.is_one())
                        .then(|| ch.t.clone()),
                    multiplicity: chars.multiplicity.clone(),
                    series,
                });
            }
        }
    }
    let represented = entries.iter().map(|e| e.multiplicity.clone()).sum();
    Ok(SolutionBasis {
        entries,
        rank,
        represented,
    })
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn choices_for(dec: &Decomposition, beta_prime: &[Rat]) -> Result<Vec<ExponentChoice>> {
    if dec.a_j.cols() == 0 {
        return Ok(vec![ExponentChoice {
            simplex: Vec::new(),
            k: Vec::new(),
            v: Vec::new(),
        }]);
    }
    let vol = normalized_volume(&dec.a_j)?;
    exponent_choices(&dec.a_j, beta_prime, &vol)
}
