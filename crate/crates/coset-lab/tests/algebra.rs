use coset_lab::partial_iso::pi_functor;
use coset_lab::{DoubleCoset, Mat, RingCtx, Submodule};
use proptest::prelude::*;
use std::collections::HashSet;

fn z9() -> RingCtx {
    RingCtx::new(3, 2).unwrap()
}

fn mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(0u64..9, rows * cols).prop_map(move |d| Mat::from_vec(z9(), rows, cols, d).unwrap())
}

fn sub(rank: usize) -> impl Strategy<Value = Submodule> {
    (0..=rank).prop_flat_map(move |k| mat(k, rank)).prop_map(|g| Submodule::from_generators(&g))
}

fn invertible(n: usize) -> impl Strategy<Value = Mat> {
    mat(n, n).prop_filter("invertible", Mat::is_invertible)
}

fn vectors(rank: usize) -> Vec<Vec<u64>> {
    (0..9u64.pow(rank as u32)).map(|mut x| (0..rank).map(|_| { let d = x % 9; x /= 9; d }).collect()).collect()
}

fn times(v: &[u64], a: &Mat) -> Vec<u64> {
    (&Mat::row_vector(a.ctx(), v) * a).row(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in 0u64..27, b in 0u64..27, c in 0u64..27) {
        let r = RingCtx::new(3, 3).unwrap();
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.add(r.sub(a, b), b), a);
        prop_assert_eq!(r.inv(a).is_ok(), a % 3 != 0);
    }

    #[test]
    fn inverse_iff_unit_mod_p(a in mat(3, 3)) {
        match a.try_inverse() {
            Ok(i) => { prop_assert!((&a * &i).is_identity() && (&i * &a).is_identity()); }
            Err(_) => {
                let e = |i, j| a.get(i, j) as i64;
                let det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                    + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
                prop_assert_eq!(det.rem_euclid(3), 0);
            }
        }
    }

    #[test]
    fn smith_reproduces_and_is_invariant(a in mat(2, 3), u in invertible(2), v in invertible(3)) {
        let s = a.smith_diagonal();
        prop_assert_eq!(&(&s.u * &s.d) * &s.v, a.clone());
        let mut e1 = s.exponents.clone();
        let mut e2 = (&(&u * &a) * &v).smith_diagonal().exponents;
        e1.sort();
        e2.sort();
        prop_assert_eq!(e1, e2);
    }

    #[test]
    fn kernel_matches_enumeration(a in mat(2, 3)) {
        let ker: HashSet<Vec<u64>> = a.kernel().elements().into_iter().collect();
        let brute: HashSet<Vec<u64>> = vectors(2).into_iter().filter(|v| times(v, &a).iter().all(|&x| x == 0)).collect();
        prop_assert_eq!(ker, brute);
    }

    #[test]
    fn submodule_presentation_and_meet(l in sub(2), m in sub(2)) {
        prop_assert_eq!(l.as_kernel().kernel(), l.clone());
        let el: HashSet<Vec<u64>> = l.elements().into_iter().collect();
        let em: HashSet<Vec<u64>> = m.elements().into_iter().collect();
        let meet: HashSet<Vec<u64>> = l.intersect(&m).unwrap().elements().into_iter().collect();
        prop_assert_eq!(meet, el.intersection(&em).cloned().collect::<HashSet<_>>());
        prop_assert_eq!(l.is_subset(&m).unwrap(), el.is_subset(&em));
    }

    #[test]
    fn pi_is_a_functor(a in invertible(3), b in invertible(3)) {
        let g1 = DoubleCoset::new(2, 1, a).unwrap();
        let g2 = DoubleCoset::new(1, 2, b).unwrap();
        let lhs = pi_functor(&g1.compose(&g2).unwrap());
        let rhs = pi_functor(&g1).l_compose(&pi_functor(&g2)).unwrap();
        prop_assert!(lhs.l_equal(&rhs));
        prop_assert!(lhs.is_compatible_exhaustive());
    }
}
