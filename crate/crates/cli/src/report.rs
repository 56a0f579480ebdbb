//! JSON rendering of library results. Indices of rows and columns are
//! one-based; lattice points and exponents are printed as they are.

use binhorn::decomp::{AndeanReport, Decomposition, Subspace};
use binhorn::geometry::VolumeResult;
use binhorn::linalg::{IntMatrix, LatticeBasis};
use binhorn::model::{BReport, BViolation, Pointedness};
use binhorn::rank::{RankReport, RankTotal};
use binhorn::series::{
    HornOperator, LinearForm, OperatorCheck, PuiseuxSeries, Scalar, SolutionBasis, SolutionEntry,
    Support, ThetaPoly,
};
use binhorn::subgraph::SubgraphAtlas;
use binhorn::Rat;
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn rat(x: &Rat) -> Value {
    json!(x.to_string())
}

pub fn rats(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| ints(r)).collect())
}

pub fn one_based(v: &[usize]) -> Value {
    json!(v.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn scalar(s: &Scalar) -> Value {
    json!({ "n": s.order(), "coeffs": rats(s.coeffs()) })
}

fn subspace(s: &Subspace) -> Value {
    json!({
        "basis": Value::Array(s.basis.iter().map(|r| rats(r)).collect()),
        "dim": s.dim(),
        "equations": Value::Array(s.equations.iter().map(|r| rats(r)).collect()),
    })
}

pub fn b_report(r: &BReport) -> Value {
    let violation = match &r.violation {
        None => Value::Null,
        Some(BViolation::RankDeficient { rank }) => {
            json!({ "kind": "rank_deficient", "rank": rank })
        }
        Some(BViolation::Unmixed(w)) => json!({ "kind": "unmixed", "vector": ints(w) }),
    };
    json!({ "rows": r.rows, "cols": r.cols, "rank": r.rank, "valid": r.is_valid(), "violation": violation })
}

pub fn pointedness(p: &Pointedness) -> Value {
    match p {
        Pointedness::Pointed(h) => json!({ "pointed": true, "functional": rats(h) }),
        Pointedness::NotPointed(y) => json!({ "pointed": false, "certificate": rats(y) }),
    }
}

pub fn decomposition(d: &Decomposition) -> Value {
    json!({
        "rowset": one_based(&d.rowset_jbar),
        "colset": one_based(&d.colset_m),
        "class": if d.is_toral() { "toral" } else { "andean" },
        "q": d.q,
        "p": d.p,
        "M": matrix(&d.m),
        "g": int(&d.g),
        "rank_A_J": d.rank_a_j,
        "A_J": matrix(&d.a_j),
    })
}

pub fn andean(r: &AndeanReport) -> Value {
    json!({
        "generically_holonomic": r.generically_holonomic,
        "directions": r.directions.iter().map(|d| json!({
            "subspace": subspace(&d.subspace),
            "rowsets": d.rowsets.iter().map(|x| one_based(x)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn atlas(a: &SubgraphAtlas) -> Value {
    json!({
        "M": matrix(&a.m),
        "mu": a.mu,
        "reps": a.reps,
        "components": a.bounded_components.iter().zip(&a.reps).map(|(c, r)| json!({
            "rep": r,
            "size": c.points.len(),
            "points": c.points,
        })).collect::<Vec<_>>(),
        "unbounded_min_generators": a.u_m_min_gens,
        "closure_level": a.closure_level,
    })
}

pub fn volume(v: &VolumeResult) -> Value {
    json!({
        "value": int(&v.value),
        "rank": v.rank,
        "lattice_basis": matrix(v.lattice.basis()),
        "simplices": v.simplices.iter().map(|s| one_based(s)).collect::<Vec<_>>(),
        "simplex_volumes": ints(&v.simplex_volumes),
    })
}

pub fn rank(r: &RankReport, cross_check: Option<&BigInt>) -> Value {
    let mut out = json!({
        "infinite": r.total == RankTotal::Infinite,
        "generically_holonomic": r.generically_holonomic,
        "andean": andean(&r.andean),
        "translates_unknown": r.translates_unknown,
        "summands": r.summands.iter().map(|s| json!({
            "rowset": one_based(&s.rowset_jbar),
            "mu": s.mu,
            "g": int(&s.g),
            "vol": int(&s.vol),
            "product": int(&s.product),
        })).collect::<Vec<_>>(),
        "degree_cross_check": cross_check.map(int).unwrap_or(Value::Null),
    });
    if let RankTotal::Finite(t) = &r.total {
        out["total"] = int(t);
    }
    out
}

fn theta_poly(p: &ThetaPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| json!({ "exponent": e, "coeff": scalar(c) }))
            .collect(),
    )
}

fn linear_form(f: &LinearForm) -> Value {
    json!({ "coeffs": ints(&f.coeffs), "constant": scalar(&f.constant) })
}

pub fn horn_operator(op: &HornOperator) -> Value {
    json!({
        "k": op.k + 1,
        "q_factors": op.q_factors.iter().map(linear_form).collect::<Vec<_>>(),
        "p_factors": op.p_factors.iter().map(linear_form).collect::<Vec<_>>(),
        "q": theta_poly(&op.q),
        "p": theta_poly(&op.p),
        "display": format!("{} - z{}*({})", op.q, op.k + 1, op.p),
    })
}

fn lattice(l: &LatticeBasis) -> Value {
    json!({ "ambient": l.ambient(), "basis": matrix(l.basis()) })
}

fn support(s: &Support) -> Value {
    json!({
        "base": rats(&s.base),
        "lattice": lattice(&s.lattice),
        "offsets": Value::Array(s.offsets.iter().map(|o| rats(o)).collect()),
    })
}

pub fn series(s: &PuiseuxSeries) -> Value {
    json!({
        "nvars": s.nvars(),
        "truncation": s.truncation.as_ref().map(int).unwrap_or(Value::Null),
        "support": s.support.as_ref().map(support).unwrap_or(Value::Null),
        "terms": s.terms().iter().map(|(e, c)| json!({ "exponent": rats(e), "coeff": scalar(c) })).collect::<Vec<_>>(),
    })
}

pub fn entry(e: &SolutionEntry) -> Value {
    json!({
        "rowset": one_based(&e.rowset_jbar),
        "gamma": e.gamma,
        "simplex": one_based(&e.simplex),
        "v": rats(&e.v),
        "character": e.character.as_ref().map(|t| ints(t)).unwrap_or(Value::Null),
        "multiplicity": int(&e.multiplicity),
        "series": series(&e.series),
    })
}

pub fn basis(b: &SolutionBasis) -> Value {
    json!({
        "rank": int(&b.rank),
        "represented": int(&b.represented),
        "count": b.entries.len(),
        "solutions": b.entries.iter().map(entry).collect::<Vec<_>>(),
    })
}

pub fn operator_check(c: &OperatorCheck) -> Value {
    json!({
        "operator": c.operator,
        "interior_residual": c.interior_residual.iter().map(|(e, s)| json!({ "exponent": rats(e), "coeff": scalar(s) })).collect::<Vec<_>>(),
        "boundary_terms": c.boundary_terms,
    })
}
