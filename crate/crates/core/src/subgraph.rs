//! Connected components of the graph on `N^q` whose edges are translations by
//! the columns of an integer matrix `M`.
//!
//! A component is infinite exactly when it contains two distinct points
//! `u <= v` (componentwise): if it is infinite, Dickson's lemma forces such a
//! pair among any infinite sequence of its points, and conversely the step
//! sequence from `u` to `v` can be repeated from `v` forever. Exploration
//! therefore stops as soon as a comparable pair shows up.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Default number of total-degree levels explored by [`bounded_atlas`].
pub const DEFAULT_CAP: usize = 1000;

pub type Point = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// All points if bounded (sorted), otherwise the points explored before
    /// the witness appeared.
    pub points: Vec<Point>,
    pub bounded: bool,
    /// For unbounded components, distinct points `u <= v` of the component.
    pub witness: Option<(Point, Point)>,
}

impl Component {
    /// Canonical representative: the colexicographically smallest point,
    /// comparing the last coordinate first.
    pub fn representative(&self) -> &Point {
        self.points
            .iter()
            .min_by(|a, b| colex(a, b))
            .expect("components are nonempty")
    }

    pub fn contains(&self, u: &[i64]) -> bool {
        self.points
            .binary_search_by(|p| p.as_slice().cmp(u))
            .is_ok()
    }
}

/// Colexicographic order: compare from the last coordinate backwards.
pub fn colex(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

pub(crate) fn columns_i64(m: &IntMatrix) -> Result<Vec<Point>> {
    m.column_vecs()
        .into_iter()
        .map(|c| {
            c.iter()
                .map(|x| x.to_i64().ok_or(Error::Overflow))
                .collect()
        })
        .collect()
}

fn comparable(a: &[i64], b: &[i64]) -> Option<std::cmp::Ordering> {
    use std::cmp::Ordering::*;
    if a.iter().zip(b).all(|(x, y)| x <= y) {
        Some(if a == b { Equal } else { Less })
    } else if a.iter().zip(b).all(|(x, y)| x >= y) {
        Some(Greater)
    } else {
        None
    }
}

fn neighbours(u: &[i64], steps: &[Point]) -> Result<Vec<Point>> {
    let mut out = Vec::with_capacity(2 * steps.len());
    for s in steps {
        for sign in [1i64, -1] {
            let mut v = Vec::with_capacity(u.len());
            let mut inside = true;
            for (a, b) in u.iter().zip(s) {
                let x = a.checked_add(sign * b).ok_or(Error::Overflow)?;
                if x < 0 {
                    inside = false;
                    break;
                }
                v.push(x);
            }
            if inside {
                out.push(v);
            }
        }
    }
    Ok(out)
}

enum Explored {
    Bounded(Vec<Point>),
    Unbounded {
        points: Vec<Point>,
        witness: Option<(Point, Point)>,
    },
}

fn explore(steps: &[Point], start: &[i64], known_unbounded: &HashSet<Point>) -> Result<Explored> {
    let mut seen: Vec<Point> = vec![start.to_vec()];
    let mut index: HashSet<Point> = HashSet::from([start.to_vec()]);
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for v in neighbours(&u, steps)? {
            if index.contains(&v) {
                continue;
            }
            if known_unbounded.contains(&v) {
                seen.push(v);
                return Ok(Explored::Unbounded {
                    points: seen,
                    witness: None,
                });
            }
            for w in &seen {
                match comparable(w, &v) {
                    Some(std::cmp::Ordering::Less) => {
                        let witness = Some((w.clone(), v.clone()));
                        seen.push(v);
                        return Ok(Explored::Unbounded {
                            points: seen,
                            witness,
                        });
                    }
                    Some(std::cmp::Ordering::Greater) => {
                        let witness = Some((v.clone(), w.clone()));
                        seen.push(v);
                        return Ok(Explored::Unbounded {
                            points: seen,
                            witness,
                        });
                    }
                    _ => {}
                }
            }
            index.insert(v.clone());
            seen.push(v.clone());
            queue.push_back(v);
        }
    }
    Ok(Explored::Bounded(seen))
}

/// The component of `gamma`, explored breadth first until it is exhausted or
/// a comparable pair certifies that it is infinite.
pub fn component_of(m: &IntMatrix, gamma: &[i64]) -> Result<Component> {
    if gamma.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, M has {} rows",
            gamma.len(),
            m.rows()
        )));
    }
    if gamma.iter().any(|&x| x < 0) {
        return Err(Error::Dimension("point has a negative coordinate".into()));
    }
    let steps = columns_i64(m)?;
    Ok(match explore(&steps, gamma, &HashSet::new())? {
        Explored::Bounded(mut points) => {
            points.sort();
            Component {
                points,
                bounded: true,
                witness: None,
            }
        }
        Explored::Unbounded { points, witness } => Component {
            points,
            bounded: false,
            witness,
        },
    })
}

/// All bounded components of the graph of `M`, found level by level in total
/// degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphAtlas {
    pub m: IntMatrix,
    /// Number of bounded components.
    pub mu: usize,
    /// One representative per bounded component, aligned with
    /// `bounded_components`.
    pub reps: Vec<Point>,
    pub bounded_components: Vec<Component>,
    /// Minimal points of the union of the unbounded components.
    pub u_m_min_gens: Vec<Point>,
    /// First degree at which every point is in an unbounded component.
    pub closure_level: usize,
}

impl SubgraphAtlas {
    /// Index of the bounded component containing `u`, if any.
    pub fn component_index(&self, u: &[i64]) -> Option<usize> {
        self.bounded_components.iter().position(|c| c.contains(u))
    }

    /// True if `u` lies in an unbounded component.
    pub fn is_unbounded(&self, u: &[i64]) -> bool {
        self.u_m_min_gens
            .iter()
            .any(|g| g.iter().zip(u).all(|(a, b)| a <= b))
    }
}

/// Points of `N^q` with coordinate sum `t`, in lexicographic order.
pub fn level_points(q: usize, t: usize) -> Vec<Point> {
    fn rec(q: usize, t: i64, prefix: &mut Point, out: &mut Vec<Point>) {
        if q == 1 {
            prefix.push(t);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in 0..=t {
            prefix.push(x);
            rec(q - 1, t - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if q == 0 {
        if t == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(q, t as i64, &mut Vec::with_capacity(q), &mut out);
    out
}

/// Enumerates the bounded components of `M`. Stops at the first degree where
/// every point lies in an unbounded component; since the unbounded union is
/// closed under adding `N^q`, nothing bounded can appear later. Fails with
/// [`Error::CapExceeded`] if that degree is not reached within `cap` levels.
pub fn bounded_atlas(m: &IntMatrix, cap: usize) -> Result<SubgraphAtlas> {
    let q = m.rows();
    let steps = columns_i64(m)?;
    let mut owner: HashMap<Point, usize> = HashMap::new();
    let mut components: Vec<Component> = Vec::new();
    let mut unbounded: HashSet<Point> = HashSet::new();
    let mut closure = None;
    for t in 0..=cap {
        let level = level_points(q, t);
        let mut any_bounded = false;
        for u in level {
            if owner.contains_key(&u) {
                any_bounded = true;
                continue;
            }
            if unbounded.contains(&u) {
                continue;
            }
            match explore(&steps, &u, &unbounded)? {
                Explored::Bounded(mut points) => {
                    points.sort();
                    for p in &points {
                        owner.insert(p.clone(), components.len());
                    }
                    components.push(Component {
                        points,
                        bounded: true,
                        witness: None,
                    });
                    any_bounded = true;
                }
                Explored::Unbounded { points, .. } => unbounded.extend(points),
            }
        }
        if !any_bounded {
            closure = Some(t);
            break;
        }
    }
    let closure_level = closure.ok_or(Error::CapExceeded { cap })?;
    components.sort_by(|a, b| {
        let (ra, rb) = (a.representative(), b.representative());
        let (da, db) = (ra.iter().sum::<i64>(), rb.iter().sum::<i64>());
        da.cmp(&db).then_with(|| colex(ra, rb))
    });
    let reps = components
        .iter()
        .map(|c| c.representative().clone())
        .collect();
    let bounded_pts: HashSet<&Point> = components.iter().flat_map(|c| &c.points).collect();
    let mut gens = BTreeSet::new();
    for t in 0..=closure_level {
        for u in level_points(q, t) {
            if bounded_pts.contains(&u) {
                continue;
            }
            let minimal = (0..q).filter(|&i| u[i] > 0).all(|i| {
                let mut w = u.clone();
                w[i] -= 1;
                bounded_pts.contains(&w)
            });
            if minimal {
                gens.insert(u);
            }
        }
    }
    let mut u_m_min_gens: Vec<Point> = gens.into_iter().collect();
    u_m_min_gens.sort_by(|a, b| {
        a.iter()
            .sum::<i64>()
            .cmp(&b.iter().sum::<i64>())
            .then_with(|| colex(a, b))
    });
    Ok(SubgraphAtlas {
        m: m.clone(),
        mu: components.len(),
        reps,
        bounded_components: components,
        u_m_min_gens,
        closure_level,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn slice_components_of_m3() {
        let c = component_of(&fixtures::m3(), &[0, 0, 1]).unwrap();
        assert!(c.bounded);
        assert_eq!(c.points, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        let u = component_of(&fixtures::m3(), &[4, 0, 0]).unwrap();
        assert!(!u.bounded);
        let (a, b) = u.witness.unwrap();
        assert!(a != b && a.iter().zip(&b).all(|(x, y)| x <= y));
    }

    #[test]
    fn erdelyi_block_witness() {
        let c = component_of(&fixtures::m_erd23(), &[1, 0]).unwrap();
        assert!(!c.bounded);
        assert_eq!(c.witness, Some((vec![1, 0], vec![2, 1])));
        assert_eq!(c.points, vec![vec![1, 0], vec![0, 2], vec![2, 1]]);
    }

    #[test]
    fn atlas_of_m3() {
        let a = bounded_atlas(&fixtures::m3(), DEFAULT_CAP).unwrap();
        assert_eq!(a.mu, 4);
        assert_eq!(
            a.reps,
            vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 0, 0], vec![3, 0, 0]]
        );
        let sizes: Vec<usize> = a
            .bounded_components
            .iter()
            .map(|c| c.points.len())
            .collect();
        assert_eq!(sizes, vec![1, 3, 6, 10]);
        for (n, c) in a.bounded_components.iter().enumerate() {
            assert!(c.points.iter().all(|p| p.iter().sum::<i64>() == n as i64));
        }
        assert_eq!(a.closure_level, 4);
        let mut top = level_points(3, 4);
        top.sort_by(|x, y| colex(x, y));
        assert_eq!(a.u_m_min_gens, top);
    }

    #[test]
    fn atlas_of_erdelyi_block() {
        let a = bounded_atlas(&fixtures::m_erd23(), DEFAULT_CAP).unwrap();
        assert_eq!(a.mu, 1);
        assert_eq!(a.reps, vec![vec![0, 0]]);
        assert_eq!(a.u_m_min_gens, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn empty_matrix() {
        let a = bounded_atlas(&IntMatrix::zeros(0, 0), DEFAULT_CAP).unwrap();
        assert_eq!(a.mu, 1);
        assert_eq!(a.reps, vec![Vec::<i64>::new()]);
        assert!(a.u_m_min_gens.is_empty());
    }

    #[test]
    fn singular_block_hits_cap() {
        // every point's component is a finite segment along (1,-1)
        let m = IntMatrix::from_i64_rows(&[&[1, 1], &[-1, -1]]);
        assert_eq!(bounded_atlas(&m, 20), Err(Error::CapExceeded { cap: 20 }));
    }
}
