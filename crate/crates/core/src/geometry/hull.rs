//! Exact convex hull facets and placing triangulations for small point sets.

use num_traits::{Signed, Zero};

use crate::linalg::combinations;
use crate::linalg::rational::{nullspace, rank, solve_any};
use crate::Rat;

/// Affine dimension of a nonempty point set.
pub fn affine_dim(points: &[Vec<Rat>]) -> usize {
    let Some(base) = points.first() else { return 0 };
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs, base.len())
}

/// A supporting hyperplane `h · x = c` of a full-dimensional point set, with
/// every point satisfying `h · x <= c`, and the indices of the points on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Rat>,
    pub offset: Rat,
    pub points: Vec<usize>,
}

/// Facets of `conv(points)` when the points affinely span `Q^r`, found by
/// testing the hyperplane through every affinely independent `r`-subset.
pub fn facets(points: &[Vec<Rat>]) -> Vec<Facet> {
    let Some(r) = points.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut out: Vec<Facet> = Vec::new();
    for subset in combinations(points.len(), r) {
        // rows (x, -1) · (h, c) = 0
        let rows: Vec<Vec<Rat>> = subset
            .iter()
            .map(|&i| {
                let mut row = points[i].clone();
                row.push(-Rat::from_integer(1.into()));
                row
            })
            .collect();
        let ns = nullspace(&rows, r + 1);
        if ns.len() != 1 {
            continue;
        }
        let mut h = ns[0][..r].to_vec();
        let mut c = ns[0][r].clone();
        if h.iter().all(Zero::is_zero) {
            continue;
        }
        let vals: Vec<Rat> = points.iter().map(|p| dot(&h, p)).collect();
        let (below, above) = (vals.iter().any(|v| *v < c), vals.iter().any(|v| *v > c));
        if below && above {
            continue;
        }
        if above {
            h.iter_mut().for_each(|x| *x = -x.clone());
            c = -c;
        }
        let on: Vec<usize> = (0..points.len())
            .filter(|&i| dot(&h, &points[i]) == c)
            .collect();
        if !out.iter().any(|f| f.points == on) {
            out.push(Facet {
                normal: h,
                offset: c,
                points: on,
            });
        }
    }
    out.sort_by(|a, b| a.points.cmp(&b.points));
    out
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Placing triangulation of `points` taken in the given order: each point
/// that lies outside the current hull is joined to the boundary faces it
/// sees; points not enlarging the hull are skipped. Returns simplices as
/// sorted index lists of size `affine_dim + 1`.
pub fn placing_triangulation(points: &[Vec<Rat>]) -> Vec<Vec<usize>> {
    if points.is_empty() {
        return Vec::new();
    }
    let mut simplices: Vec<Vec<usize>> = vec![vec![0]];
    let mut placed: Vec<usize> = vec![0];
    let mut dim = 0;
    for p in 1..points.len() {
        let mut with_p: Vec<Vec<Rat>> = placed.iter().map(|&i| points[i].clone()).collect();
        with_p.push(points[p].clone());
        let new_dim = affine_dim(&with_p);
        if new_dim > dim {
            for s in simplices.iter_mut() {
                s.push(p);
            }
            dim = new_dim;
        } else {
            let mut added = Vec::new();
            for (face, opposite) in boundary_faces(&simplices) {
                if beyond(points, &face, opposite, p) {
                    let mut s = face.clone();
                    s.push(p);
                    added.push(s);
                }
            }
            if added.is_empty() {
                continue;
            }
            simplices.extend(added);
        }
        placed.push(p);
    }
    for s in simplices.iter_mut() {
        s.sort_unstable();
    }
    simplices.sort();
    simplices
}

/// Codimension-one faces lying in exactly one simplex, with the vertex of
/// that simplex opposite the face.
fn boundary_faces(simplices: &[Vec<usize>]) -> Vec<(Vec<usize>, usize)> {
    let mut faces: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for s in simplices {
        for (k, &opp) in s.iter().enumerate() {
            let mut f: Vec<usize> = s
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &v)| v)
                .collect();
            f.sort_unstable();
            match faces.iter_mut().find(|(g, _, _)| *g == f) {
                Some(entry) => entry.2 += 1,
                None => faces.push((f, opp, 1)),
            }
        }
    }
    faces
        .into_iter()
        .filter(|x| x.2 == 1)
        .map(|(f, o, _)| (f, o))
        .collect()
}

/// True if `p` lies strictly on the other side of `aff(face)` from
/// `opposite`, within the affine hull of `face ∪ {opposite}`.
fn beyond(points: &[Vec<Rat>], face: &[usize], opposite: usize, p: usize) -> bool {
    let r = points[p].len();
    let verts: Vec<usize> = face
        .iter()
        .copied()
        .chain(std::iter::once(opposite))
        .collect();
    let mut rows: Vec<Vec<Rat>> = (0..r)
        .map(|i| verts.iter().map(|&v| points[v][i].clone()).collect())
        .collect();
    rows.push(vec![Rat::from_integer(1.into()); verts.len()]);
    let mut rhs = points[p].clone();
    rhs.push(Rat::from_integer(1.into()));
    match solve_any(&rows, verts.len(), &rhs) {
        Some(lambda) => lambda.last().is_some_and(|x| x.is_negative()),
        None => false,
    }
}
