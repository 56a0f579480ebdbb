//! Block decompositions `B = [[N, B_J], [M, 0]]` after permuting rows and
//! columns, where `M` sits on a row subset `J̄` and is mixed.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::{nullspace, rref};
use crate::linalg::{int_rank, lattice_index, saturation, IntMatrix, LatticeBasis};
use crate::model::{is_mixed, HornInput};
use crate::Rat;

/// Largest `n` for which row subsets are enumerated.
pub const MAX_ROWS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Toral,
    Andean,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Rows of `M` (0-based, increasing).
    pub rowset_jbar: Vec<usize>,
    /// Columns of `B` meeting `J̄`, i.e. the columns of `M` and `N`.
    pub colset_m: Vec<usize>,
    /// Complement of `J̄`.
    pub j: Vec<usize>,
    pub m: IntMatrix,
    pub n: IntMatrix,
    pub b_j: IntMatrix,
    pub q: usize,
    pub p: usize,
    pub class: Class,
    /// Saturation of `Z B_J` inside `Z^J`.
    pub l_basis: LatticeBasis,
    /// Index of `Z B_J` in its saturation.
    pub g: BigInt,
    /// Columns of `A` indexed by `J`.
    pub a_j: IntMatrix,
    /// Columns of `A` indexed by `J̄`.
    pub a_jbar: IntMatrix,
    pub rank_a_j: usize,
}

impl Decomposition {
    pub fn is_toral(&self) -> bool {
        self.class == Class::Toral
    }
}

/// Every row subset `J̄` (other than singletons) whose block `M` is mixed with
/// at most as many rows as columns, classified as toral when
/// `rank(A_J) = |J| - rank(B_J)`. Sorted by size of `J̄`, then
/// lexicographically.
pub fn enumerate_decompositions(input: &HornInput) -> Result<Vec<Decomposition>> {
    let (b, a) = (input.b(), input.a());
    let n = b.rows();
    if n > MAX_ROWS {
        return Err(Error::TooLarge(format!(
            "{n} rows exceed the limit of {MAX_ROWS} for subset enumeration"
        )));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() == 1 {
            continue;
        }
        let jbar: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if let Some(dec) = decomposition_for(b, a, &jbar)? {
            out.push(dec);
        }
    }
    out.sort_by(|x, y| {
        x.rowset_jbar
            .len()
            .cmp(&y.rowset_jbar.len())
            .then_with(|| x.rowset_jbar.cmp(&y.rowset_jbar))
    });
    Ok(out)
}

/// The decomposition with lower block on the rows `jbar`, if that block is
/// mixed and has no more rows than columns.
pub fn decomposition_for(
    b: &IntMatrix,
    a: &IntMatrix,
    jbar: &[usize],
) -> Result<Option<Decomposition>> {
    let (n, mcols) = (b.rows(), b.cols());
    let j: Vec<usize> = (0..n).filter(|i| !jbar.contains(i)).collect();
    let colset: Vec<usize> = (0..mcols)
        .filter(|&k| jbar.iter().any(|&i| !b.get(i, k).is_zero()))
        .collect();
    let rest: Vec<usize> = (0..mcols).filter(|k| !colset.contains(k)).collect();
    let (q, p) = (jbar.len(), colset.len());
    if q > p {
        return Ok(None);
    }
    let m = b.submatrix(jbar, &colset);
    if q > 0 && !m.column_vecs().iter().all(|c| is_mixed(c)) {
        return Ok(None);
    }
    let n_block = b.submatrix(&j, &colset);
    let b_j = b.submatrix(&j, &rest);
    let a_j = a.select_columns(&j);
    let a_jbar = a.select_columns(jbar);
    let rank_a_j = int_rank(&a_j);
    let rank_b_j = int_rank(&b_j);
    let class = if rank_a_j == j.len() - rank_b_j {
        Class::Toral
    } else {
        Class::Andean
    };
    let g = lattice_index(&b_j)?;
    let l_basis = LatticeBasis::from_generators(&saturation(&b_j));
    Ok(Some(Decomposition {
        rowset_jbar: jbar.to_vec(),
        colset_m: colset,
        j,
        m,
        n: n_block,
        b_j,
        q,
        p,
        class,
        l_basis,
        g,
        a_j,
        a_jbar,
        rank_a_j,
    }))
}

/// A rational subspace of `Q^ambient`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub ambient: usize,
    /// Reduced row echelon basis.
    pub basis: Vec<Vec<Rat>>,
    /// Reduced row echelon basis of the orthogonal complement; the subspace is
    /// `{x : e · x = 0 for every e}`.
    pub equations: Vec<Vec<Rat>>,
}

impl Subspace {
    /// Column span of `a`.
    pub fn column_span(a: &IntMatrix) -> Self {
        let ambient = a.rows();
        let cols = a.transpose().to_rat_rows();
        let (basis, _) = rref(&cols, ambient);
        let eqs = nullspace(&cols, ambient);
        let (equations, _) = rref(&eqs, ambient);
        Subspace {
            ambient,
            basis,
            equations,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AndeanDirection {
    pub subspace: Subspace,
    /// Row sets `J̄` of the Andean decompositions with this direction.
    pub rowsets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AndeanReport {
    /// Distinct spans `Q A_J` over Andean decompositions. Their integer
    /// translates are not computed.
    pub directions: Vec<AndeanDirection>,
    /// False when some direction is all of `Q^d`.
    pub generically_holonomic: bool,
}

pub fn andean_report(decomps: &[Decomposition], d: usize) -> AndeanReport {
    let mut directions: Vec<AndeanDirection> = Vec::new();
    for dec in decomps.iter().filter(|x| !x.is_toral()) {
        let s = Subspace::column_span(&dec.a_j);
        match directions.iter_mut().find(|x| x.subspace == s) {
            Some(x) => x.rowsets.push(dec.rowset_jbar.clone()),
            None => directions.push(AndeanDirection {
                subspace: s,
                rowsets: vec![dec.rowset_jbar.clone()],
            }),
        }
    }
    let generically_holonomic = directions.iter().all(|x| x.subspace.dim() < d);
    AndeanReport {
        directions,
        generically_holonomic,
    }
}
