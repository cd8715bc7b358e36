mod common;

use coset_lab::idempotent::*;
use coset_lab::partial_iso::pi_functor;
use coset_lab::{DoubleCoset, Mat, RingCtx, Submodule};
use common::*;
use rand::Rng;

fn z9() -> RingCtx {
    RingCtx::new(3, 2).unwrap()
}

fn random_nilpotent_pair(ctx: RingCtx, m: usize, n: usize, r: &mut rand_chacha::ChaCha8Rng) -> (Mat, Mat) {
    loop {
        let b = random_mat(ctx, m, n, r);
        let c = random_mat(ctx, n, m, r);
        if (&b * &c).is_nilpotent().unwrap() {
            return (b, c);
        }
    }
}

#[test]
fn lemma2_product_vanishes() {
    let ctx = z9();
    let mut r = rng(2);
    for _ in 0..200 {
        let m = r.gen_range(1..=2);
        let n = r.gen_range(1..=2);
        let (b, c) = random_nilpotent_pair(ctx, m, n, &mut r);
        let u = solve_lemma2(&b, &c).unwrap();
        let one = Mat::identity(ctx, n);
        let cb = &c * &b;
        let t = (&one - &(&cb * &u)).try_inverse().unwrap();
        let s = (&one - &cb).try_inverse().unwrap();
        let row = u.hstack(&u).hstack(&t);
        let col = one.vstack(&t).vstack(&s);
        assert!((&row * &col).is_zero());
        assert!(u.is_invertible());
    }
}

#[test]
fn uu_kills_the_corner() {
    let ctx = RingCtx::new(3, 3).unwrap();
    let mut r = rng(3);
    for _ in 0..200 {
        let (s, k) = (r.gen_range(1..=2), r.gen_range(1..=2));
        let al = random_mat(ctx, s, s, &mut r);
        let be = random_mat(ctx, s, k, &mut r);
        let ga = random_mat(ctx, k, s, &mut r);
        let de = random_mat(ctx, k, k, &mut r);
        let u = solve_uu(&al, &be, &ga, &de).unwrap();
        let a = Mat::block_compose(&[
            vec![al.scale(3), be.scale(3)],
            vec![ga.scale(3), &Mat::identity(ctx, k) + &de.scale(3)],
        ])
        .unwrap();
        let mut z = Mat::identity(ctx, s + k);
        let mut zi = Mat::identity(ctx, s + k);
        z.set_block(0, s, &u.scale(3));
        zi.set_block(0, s, &u.scale(3).neg());
        let conj = &(&z * &a) * &zi;
        assert!(conj.block(0, s, s, s + k).is_zero());
    }
}

#[test]
fn power_normal_form_all_2x2_over_z9() {
    let ctx = z9();
    for a in coset_lab::linalg::all_matrices(ctx, 2, 2) {
        let nf = nilpotent_unit_normal_form(&a).unwrap();
        let conj = &(&nf.zeta * &a) * &nf.zeta.try_inverse().unwrap();
        let target = Mat::zeros(ctx, 2 - nf.k, 2 - nf.k).direct_sum(&Mat::identity(ctx, nf.k));
        assert_eq!(conj.pow(nf.n), target, "{a}");
        for n in 1..nf.n {
            assert_ne!(conj.pow(n), target);
        }
    }
}

#[test]
fn pair_forms_on_random_inputs() {
    let ctx = z9();
    let mut r = rng(4);
    for _ in 0..150 {
        let m = r.gen_range(1..=3);
        let n = r.gen_range(1..=3);
        let b = random_mat(ctx, m, n, &mut r);
        let c = random_mat(ctx, n, m, &mut r);
        let a = pair_canonical_form(&b, &c, PairMode::TwoSided).unwrap();
        assert!(part_a_conditions(&a));
        assert_eq!(&(&a.u.try_inverse().unwrap() * &b) * &a.v, a.b);
        assert_eq!(&(&a.v.try_inverse().unwrap() * &c) * &a.u, a.c);
        let f = pair_canonical_form(&b, &c, PairMode::ThreeSided).unwrap();
        assert!(part_b_conditions(&f), "{b} {c} -> {} {}", f.b, f.c);
        let bp = b.hstack(&Mat::zeros(ctx, m, f.pad));
        let cp = c.vstack(&Mat::zeros(ctx, f.pad, m));
        assert_eq!(&(&f.u.try_inverse().unwrap() * &bp) * &f.v, f.b);
        assert_eq!(&(&f.w.try_inverse().unwrap() * &cp) * &f.u, f.c);
    }
}

#[test]
fn canonical_conjugate_is_equivalent() {
    let ctx = z9();
    let mut r = rng(5);
    for _ in 0..60 {
        let m = r.gen_range(1..=2);
        let b = random_mat(ctx, m, m, &mut r);
        let c = random_mat(ctx, m, m, &mut r);
        let x = XIdempotent::from_pair(&b, &c).to_coset();
        let ic = idempotent_canonical(&x, 1 << 24).unwrap();
        assert!((&ic.gamma * &ic.beta).mod_p().is_zero());
        assert!((&ic.beta * &ic.gamma).mod_p().is_zero());
        let q = DoubleCoset::automorphism(&ic.q).unwrap();
        let qi = DoubleCoset::automorphism(&ic.q.try_inverse().unwrap()).unwrap();
        let conj = q.compose(&x).unwrap().compose(&qi).unwrap();
        let canon = build_x(&ic.form.b, &ic.form.c).unwrap();
        assert!(conj.equivalent(&canon, 1 << 24).unwrap());
        if conj.size().max(canon.size()) - m <= 2 {
            assert!(brute_equivalent(&conj, &canon));
        }
    }
}

#[test]
fn gg1_matches_x_on_scalars() {
    let z3 = RingCtx::new(3, 1).unwrap();
    for bv in 0..3 {
        for cv in 0..3 {
            if (bv * cv) % 3 == 1 {
                continue;
            }
            let b = Mat::from_rows(z3, &[vec![bv]]).unwrap();
            let c = Mat::from_rows(z3, &[vec![cv]]).unwrap();
            let x = gg1_idempotent(&b, &c).unwrap();
            let g = DoubleCoset::new(1, 1, square_pair(&b, &c).unwrap()).unwrap();
            let e = g.involution().compose(&g).unwrap();
            if (bv * cv) % 3 == 0 {
                assert!(brute_equivalent(&e, &build_x(&b, &c).unwrap()));
            }
            assert_eq!(x, XIdempotent::from_pair(&b, &c));
        }
    }
}

#[test]
fn reduced_decomposition_certificates() {
    let ctx = z9();
    let mut r = rng(6);
    for _ in 0..80 {
        let m = r.gen_range(1..=2);
        let (b, c) = random_nilpotent_pair(ctx, m, 1, &mut r);
        let g = DoubleCoset::new(m, m, square_pair(&b, &c).unwrap()).unwrap();
        let red = decompose_reduced(&g).unwrap();
        let ax = red.rebuild().unwrap();
        assert_eq!(pi_functor(&g), pi_functor(&ax));
        let (lhs, rhs) = decomposition_certificate(&g, &red).unwrap().unwrap();
        if lhs.size().max(rhs.size()) - m <= 2 {
            assert!(brute_equivalent(&lhs, &rhs));
        } else {
            assert!(lhs.equivalent(&rhs, 1 << 24).unwrap());
        }
    }
}

#[test]
fn x_product_is_intersection() {
    let z3 = RingCtx::new(3, 1).unwrap();
    let subs = Submodule::enumerate_all(z3, 1);
    let xs: Vec<XIdempotent> = subs
        .iter()
        .flat_map(|l| subs.iter().map(move |m| XIdempotent::new(l.clone(), m.clone()).unwrap()))
        .collect();
    for x in &xs {
        for y in &xs {
            let prod = x.to_coset().compose(&y.to_coset()).unwrap();
            let expect = x.product(y).unwrap().to_coset();
            assert!(certified_equivalent(&prod, &expect));
        }
    }
}

#[test]
fn power_trick_lands_in_x_form() {
    let ctx = RingCtx::new(3, 1).unwrap();
    let a = Mat::from_rows(ctx, &[vec![1, 0]]).unwrap();
    let b = Mat::from_rows(ctx, &[vec![0], vec![1]]).unwrap().transpose();
    let b = b.transpose();
    let (q, conj) = power_trick(&a, &b).unwrap();
    assert_eq!(q.rows(), 1 + 3 * 2);
    // conjugated: first copy carries b only, later copies carry multiples of a only
    assert!(conj.block(0, 1, 1, 3).is_zero());
    assert_eq!(conj.block(1, 3, 0, 1), b);
    assert!(conj.block(3, 7, 0, 1).is_zero());
    assert_eq!(conj.block(0, 1, 3, 5), a.neg());
    assert_eq!(conj.block(1, 7, 1, 7), Mat::identity(ctx, 6));
}
