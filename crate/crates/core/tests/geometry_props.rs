use binhorn::geometry::normalized_volume;
use binhorn::linalg::{int_rank, lattice_index_by_minors, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Twice the area of the convex hull, by monotone chain and the shoelace
/// formula.
fn doubled_hull_area(mut pts: Vec<(i64, i64)>) -> i64 {
    pts.sort();
    pts.dedup();
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    let hull = [lower, upper].concat();
    let n = hull.len();
    (0..n)
        .map(|i| hull[i].0 * hull[(i + 1) % n].1 - hull[(i + 1) % n].0 * hull[i].1)
        .sum::<i64>()
        .abs()
}

fn config(d: usize) -> impl Strategy<Value = IntMatrix> {
    (d..=d + 3).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, n), d).prop_map(|rows| {
            let refs: Vec<&[i64]> = rows.iter().map(|x| x.as_slice()).collect();
            IntMatrix::from_i64_rows(&refs)
        })
    })
}

fn unimodular(d: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..d, 1..d, -3i64..=3, any::<bool>()), 1..8).prop_map(move |ops| {
        let mut u = IntMatrix::identity(d);
        for (i, off, k, flip) in ops {
            let mut e = IntMatrix::identity(d);
            e.set(i, (i + off) % d, BigInt::from(k));
            if flip {
                e.set(i, i, BigInt::from(-1));
            }
            u = &e * &u;
        }
        u
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_volume_matches_shoelace(a in config(2)) {
        prop_assume!(int_rank(&a) == 2);
        let mut pts = vec![(0i64, 0i64)];
        for c in a.column_vecs() {
            pts.push((c[0].clone().try_into().unwrap(), c[1].clone().try_into().unwrap()));
        }
        let index = lattice_index_by_minors(&a.transpose()).unwrap();
        let area = BigInt::from(doubled_hull_area(pts));
        prop_assert!(area.is_multiple_of(&index));
        prop_assert_eq!(normalized_volume(&a).unwrap().value, area / index);
    }

    #[test]
    fn volume_is_unimodular_invariant_2d(a in config(2), u in unimodular(2)) {
        prop_assume!(int_rank(&a) == 2);
        prop_assert_eq!(normalized_volume(&a).unwrap().value, normalized_volume(&(&u * &a)).unwrap().value);
    }

    #[test]
    fn volume_is_unimodular_invariant_3d(a in config(3), u in unimodular(3)) {
        prop_assume!(int_rank(&a) == 3);
        let v = normalized_volume(&a).unwrap();
        prop_assert!(v.value.is_positive());
        prop_assert_eq!(v.simplex_volumes.iter().sum::<BigInt>(), v.value.clone());
        prop_assert_eq!(v.value, normalized_volume(&(&u * &a)).unwrap().value);
    }

    #[test]
    fn volume_ignores_column_order(a in config(3), seed in any::<u64>()) {
        prop_assume!(int_rank(&a) == 3);
        let mut idx: Vec<usize> = (0..a.cols()).collect();
        let k = (seed as usize) % idx.len();
        idx.rotate_left(k);
        if seed % 2 == 0 {
            idx.reverse();
        }
        prop_assert_eq!(normalized_volume(&a).unwrap().value, normalized_volume(&a.select_columns(&idx)).unwrap().value);
    }
}
