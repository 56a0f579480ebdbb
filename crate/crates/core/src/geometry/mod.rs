//! Normalized volumes, facet support functions, nonresonance and Gamma-series
//! exponent choices for a column configuration `A_J`.

mod hull;

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::linalg::rational::{inverse, mat_vec};
use crate::linalg::{IntMatrix, LatticeBasis};
use crate::model::primitive_integer;
use crate::subgraph::SubgraphAtlas;
use crate::Rat;

pub use hull::{affine_dim, facets, placing_triangulation, Facet};

fn rat(x: &BigInt) -> Rat {
    Rat::from_integer(x.clone())
}

/// Columns of `a` written in the canonical basis of their own lattice `Z a`.
fn lattice_coordinates(a: &IntMatrix) -> (LatticeBasis, Vec<Vec<BigInt>>) {
    let lat = LatticeBasis::from_generators(a);
    let coords = a
        .column_vecs()
        .iter()
        .map(|c| lat.coords(c).expect("column lies in its own lattice"))
        .collect();
    (lat, coords)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeResult {
    /// `r!` times the Euclidean volume of `conv(0, columns)`, measured in
    /// the lattice spanned by the columns.
    pub value: BigInt,
    pub rank: usize,
    /// The lattice `Z A_J` used for normalization.
    pub lattice: LatticeBasis,
    /// Maximal simplices `{0} ∪ σ` of a triangulation, listed by the column
    /// sets `σ`. Obtained by placing-triangulating each facet away from the
    /// origin in column order and coning from the origin.
    pub simplices: Vec<Vec<usize>>,
    /// Normalized volume of each simplex, aligned with `simplices`.
    pub simplex_volumes: Vec<BigInt>,
}

/// Normalized volume of `conv(0, columns of a_j)` with respect to the lattice
/// spanned by the columns. The columns must span a pointed cone.
pub fn normalized_volume(a_j: &IntMatrix) -> Result<VolumeResult> {
    let (lattice, coords) = lattice_coordinates(a_j);
    let r = lattice.rank();
    if r == 0 {
        return Err(Error::Degenerate(
            "point set spans no volume (rank 0)".into(),
        ));
    }
    let pts: Vec<Vec<Rat>> = coords.iter().map(|c| c.iter().map(rat).collect()).collect();
    let mut with_origin = vec![vec![Rat::zero(); r]];
    with_origin.extend(pts.iter().cloned());
    let mut simplices = Vec::new();
    let mut simplex_volumes = Vec::new();
    let mut value = BigInt::zero();
    for f in facets(&with_origin) {
        if f.points.contains(&0) {
            continue;
        }
        let cols: Vec<usize> = f.points.iter().map(|i| i - 1).collect();
        let face_pts: Vec<Vec<Rat>> = cols.iter().map(|&j| pts[j].clone()).collect();
        for s in placing_triangulation(&face_pts) {
            let sigma: Vec<usize> = s.iter().map(|&i| cols[i]).collect();
            let rows: Vec<Vec<BigInt>> = (0..r)
                .map(|i| sigma.iter().map(|&j| coords[j][i].clone()).collect())
                .collect();
            let vol = IntMatrix::from_rows(rows, r)?.det()?.abs();
            value += &vol;
            simplices.push(sigma);
            simplex_volumes.push(vol);
        }
    }
    let mut order: Vec<usize> = (0..simplices.len()).collect();
    order.sort_by(|&x, &y| simplices[x].cmp(&simplices[y]));
    let simplices = order.iter().map(|&i| simplices[i].clone()).collect();
    let simplex_volumes = order.iter().map(|&i| simplex_volumes[i].clone()).collect();
    Ok(VolumeResult {
        value,
        rank: r,
        lattice,
        simplices,
        simplex_volumes,
    })
}

/// Primitive support function of one facet of the cone over `A_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFunction {
    /// Columns on the facet.
    pub facet: Vec<usize>,
    /// `ν` as a row vector on `Q^d`.
    pub nu: Vec<Rat>,
}

impl SupportFunction {
    pub fn eval(&self, beta: &[Rat]) -> Rat {
        hull::dot(&self.nu, beta)
    }
}

/// One support function per facet of `cone(a_j)`, nonnegative on the
/// columns, zero exactly on the facet columns, and mapping `Z a_j` onto `Z`.
/// Requires `a_j` to have full row rank.
pub fn facet_support_functions(a_j: &IntMatrix) -> Result<Vec<SupportFunction>> {
    let d = a_j.rows();
    let (lattice, coords) = lattice_coordinates(a_j);
    if lattice.rank() != d {
        return Err(Error::Degenerate(format!(
            "support functions need rank {d}, columns have rank {}",
            lattice.rank()
        )));
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    let pts: Vec<Vec<Rat>> = coords.iter().map(|c| c.iter().map(rat).collect()).collect();
    let mut with_origin = vec![vec![Rat::zero(); d]];
    with_origin.extend(pts.iter().cloned());
    let h_inv = inverse(&lattice.basis().to_rat_rows()).expect("full rank lattice basis");
    let mut out = Vec::new();
    let seen_facets: Vec<Facet> = if d == 1 {
        // the cone is a ray; its only face is the apex
        let sign = if pts.iter().all(|p| p[0].is_positive()) {
            -1
        } else {
            1
        };
        vec![Facet {
            normal: vec![Rat::from_integer(sign.into())],
            offset: Rat::zero(),
            points: vec![0],
        }]
    } else {
        facets(&with_origin)
    };
    for f in seen_facets {
        if !f.points.contains(&0) || !f.offset.is_zero() {
            continue;
        }
        // facets put points at h·x <= 0, so the support function is -h
        let h: Vec<Rat> = f.normal.iter().map(|x| -x.clone()).collect();
        let prim: Vec<Rat> = primitive_integer(&h).iter().map(rat).collect();
        let nu: Vec<Rat> = (0..d)
            .map(|k| (0..d).fold(Rat::zero(), |acc, i| acc + &prim[i] * &h_inv[i][k]))
            .collect();
        let facet: Vec<usize> = f.points.iter().filter(|&&i| i > 0).map(|i| i - 1).collect();
        out.push(SupportFunction { facet, nu });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub gamma: Vec<i64>,
    pub facet: Vec<usize>,
    pub value: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeryGenericReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Shifted parameter `β - A_J̄ γ`.
pub fn shifted_beta(beta: &[Rat], a_jbar: &IntMatrix, gamma: &[i64]) -> Vec<Rat> {
    let g: Vec<Rat> = gamma.iter().map(|&x| Rat::from_integer(x.into())).collect();
    let shift = a_jbar.mul_rat_vec(&g);
    beta.iter().zip(shift).map(|(b, s)| b - s).collect()
}

/// Checks that `ν(β - A_J̄ γ)` is not an integer for any facet support
/// function `ν` of `A_J` and any representative `γ` of the atlas.
pub fn very_generic_check(
    beta: &[Rat],
    dec: &Decomposition,
    atlas: &SubgraphAtlas,
) -> Result<VeryGenericReport> {
    if !dec.is_toral() {
        return Err(Error::Degenerate(
            "very generic check needs a toral decomposition".into(),
        ));
    }
    if beta.len() != dec.a_j.rows() {
        return Err(Error::Dimension(format!(
            "beta has {} entries, expected {}",
            beta.len(),
            dec.a_j.rows()
        )));
    }
    let funcs = facet_support_functions(&dec.a_j)?;
    let mut violations = Vec::new();
    for gamma in &atlas.reps {
        let b = shifted_beta(beta, &dec.a_jbar, gamma);
        for f in &funcs {
            let value = f.eval(&b);
            if value.is_integer() {
                violations.push(Violation {
                    gamma: gamma.clone(),
                    facet: f.facet.clone(),
                    value,
                });
            }
        }
    }
    Ok(VeryGenericReport {
        ok: violations.is_empty(),
        violations,
    })
}

/// One Gamma-series starting exponent: `v` is supported on the simplex
/// `sigma` plus the nonnegative integer offsets `k` on the other columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentChoice {
    pub simplex: Vec<usize>,
    pub k: Vec<BigInt>,
    pub v: Vec<Rat>,
}

/// For each simplex of the triangulation in `vol`, one exponent per coset of
/// `Z A_σ` in `Z A_J`. Coset representatives `k ∈ N^{σ̄}` are found breadth
/// first by total degree, so the count per simplex is its normalized volume.
/// Every choice satisfies `A_J v = beta_prime`.
pub fn exponent_choices(
    a_j: &IntMatrix,
    beta_prime: &[Rat],
    vol: &VolumeResult,
) -> Result<Vec<ExponentChoice>> {
    let (d, k_cols) = (a_j.rows(), a_j.cols());
    if vol.rank != d {
        return Err(Error::Degenerate(
            "exponent choices need full rank columns".into(),
        ));
    }
    let mut out = Vec::new();
    for (sigma, svol) in vol.simplices.iter().zip(&vol.simplex_volumes) {
        let rest: Vec<usize> = (0..k_cols).filter(|j| !sigma.contains(j)).collect();
        let a_sigma = a_j.select_columns(sigma).to_rat_rows();
        let inv = inverse(&a_sigma).ok_or_else(|| Error::Internal("singular simplex".into()))?;
        let a_rest = a_j.select_columns(&rest);
        let class = |k: &[BigInt]| -> Vec<Rat> {
            let w = a_rest.mul_vec(k);
            let w: Vec<Rat> = w.iter().map(rat).collect();
            mat_vec(&inv, &w).into_iter().map(|x| x.fract()).collect()
        };
        let need = svol.clone();
        let mut found: Vec<Vec<BigInt>> = Vec::new();
        let mut classes: BTreeSet<Vec<Rat>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<BigInt>> = VecDeque::from([vec![BigInt::zero(); rest.len()]]);
        let mut visited: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        while BigInt::from(found.len()) < need {
            let k = queue
                .pop_front()
                .ok_or_else(|| Error::Internal("coset search exhausted".into()))?;
            if !visited.insert(k.clone()) {
                continue;
            }
            if classes.insert(class(&k)) {
                found.push(k.clone());
            }
            for i in 0..rest.len() {
                let mut next = k.clone();
                next[i] += 1;
                queue.push_back(next);
            }
        }
        for k in found {
            let w = a_rest.mul_vec(&k);
            let target: Vec<Rat> = beta_prime.iter().zip(&w).map(|(b, x)| b - rat(x)).collect();
            let vs = mat_vec(&inv, &target);
            let mut v = vec![Rat::zero(); k_cols];
            for (pos, &j) in sigma.iter().enumerate() {
                v[j] = vs[pos].clone();
            }
            for (pos, &j) in rest.iter().enumerate() {
                v[j] = rat(&k[pos]);
            }
            out.push(ExponentChoice {
                simplex: sigma.clone(),
                k,
                v,
            });
        }
    }
    Ok(out)
}
