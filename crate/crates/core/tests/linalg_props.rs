use binhorn::linalg::{
    column_hnf, int_rank, kernel_basis, lattice_index, lattice_index_by_invariant_factors,
    lattice_index_by_minors, row_hnf, saturation, smith_normal_form, IntMatrix, LatticeBasis,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r).prop_map(|rows| {
            let refs: Vec<&[i64]> = rows.iter().map(|x| x.as_slice()).collect();
            IntMatrix::from_i64_rows(&refs)
        })
    })
}

fn same_column_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    let la = LatticeBasis::from_generators(a);
    let lb = LatticeBasis::from_generators(b);
    a.column_vecs().iter().all(|c| lb.contains(c)) && b.column_vecs().iter().all(|c| la.contains(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn smith_form_invariants(a in matrix(4, 5, 7)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert!(s.u.det().unwrap().abs().is_one());
        prop_assert!(s.v.det().unwrap().abs().is_one());
        let f = s.invariant_factors();
        prop_assert_eq!(f.len(), int_rank(&a));
        for w in f.windows(2) {
            prop_assert!(w[0].is_positive() && w[1].is_multiple_of(&w[0]));
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j || i >= s.rank {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn hermite_forms_are_canonical(a in matrix(4, 5, 7)) {
        let h = row_hnf(&a);
        prop_assert_eq!(row_hnf(&h), h.clone());
        prop_assert_eq!(h.rows(), int_rank(&a));
        prop_assert!(same_column_lattice(&a.transpose(), &h.transpose()));
        let c = column_hnf(&a);
        prop_assert_eq!(column_hnf(&c), c.clone());
        prop_assert!(same_column_lattice(&a, &c));
    }

    #[test]
    fn kernel_rank_nullity(a in matrix(4, 5, 5)) {
        let k = kernel_basis(&a);
        prop_assert!((&a * &k).is_zero());
        prop_assert_eq!(k.cols() + int_rank(&a), a.cols());
        if k.cols() > 0 {
            prop_assert_eq!(lattice_index(&k).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn saturation_is_idempotent(l in matrix(5, 3, 6)) {
        let s = saturation(&l);
        prop_assert_eq!(saturation(&s), s.clone());
        prop_assert_eq!(int_rank(&s), int_rank(&l));
        let sat = LatticeBasis::from_generators(&s);
        prop_assert!(l.column_vecs().iter().all(|c| sat.contains(c)));
        if s.cols() > 0 {
            prop_assert_eq!(lattice_index(&s).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn index_oracles_agree(l in matrix(5, 4, 9)) {
        prop_assume!(int_rank(&l) == l.cols());
        prop_assert_eq!(Some(lattice_index_by_invariant_factors(&l)), lattice_index_by_minors(&l));
    }

    #[test]
    fn coordinates_round_trip(l in matrix(4, 3, 6), c in prop::collection::vec(-5i64..=5, 4)) {
        let lat = LatticeBasis::from_generators(&l);
        let coords: Vec<BigInt> = c.iter().take(lat.rank()).map(|&x| BigInt::from(x)).collect();
        prop_assume!(coords.len() == lat.rank());
        let p = lat.point(&coords);
        prop_assert_eq!(lat.coords(&p), Some(coords));
    }
}
