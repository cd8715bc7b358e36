mod common;

use coset_lab::linalg::general_linear;
use coset_lab::partial_iso::{enumerate_end, LMorphism};
use coset_lab::stabilizer::*;
use coset_lab::{DoubleCoset, Mat, RingCtx, Submodule};
use common::*;

/// Membership straight from the definitions on every element of L and M.
fn oracle_tiers(g: &Mat, spec: &StabilizerSpec) -> (bool, bool) {
    let ctx = g.ctx();
    let n = g.rows();
    let git = g.try_inverse().unwrap().transpose();
    let pad = |v: &Vec<u64>| {
        let mut v = v.clone();
        v.resize(n, 0);
        v
    };
    let mul = |v: &Vec<u64>, h: &Mat| (&Mat::row_vector(ctx, v) * h).row(0);
    let ls: Vec<Vec<u64>> = spec.l.elements().iter().map(pad).collect();
    let ms: Vec<Vec<u64>> = spec.m.elements().iter().map(pad).collect();
    let hat = ls.iter().all(|v| ls.contains(&mul(v, g))) && ms.iter().all(|w| ms.contains(&mul(w, &git)));
    let circ = ls.iter().all(|v| &mul(v, g) == v) && ms.iter().all(|w| &mul(w, &git) == w);
    (hat, circ)
}

#[test]
fn tiers_nest_and_agree_with_definitions() {
    let z3 = RingCtx::new(3, 1).unwrap();
    let gl = general_linear(z3, 2, 1 << 10).unwrap();
    for m in 1..=2 {
        let subs = Submodule::enumerate_all(z3, m);
        for l in &subs {
            for mm in &subs {
                let spec = StabilizerSpec::new(l.clone(), mm.clone(), 2).unwrap();
                for g in gl.iter() {
                    let (hat, _) = membership(g, &spec, Tier::Hat).unwrap();
                    let (circ, cw) = membership(g, &spec, Tier::Circ).unwrap();
                    let (bullet, bw) = membership(g, &spec, Tier::Bullet).unwrap();
                    assert_eq!((hat, circ), oracle_tiers(g, &spec));
                    assert!(!bullet || circ);
                    assert!(!circ || hat);
                    if let Some(w) = bw {
                        let u = w.u.unwrap();
                        let a = &Mat::identity(z3, m) - &(&(&spec.b * &u) * &spec.c);
                        assert_eq!(a, g.block(0, m, 0, m));
                    }
                    if let Some(w) = cw {
                        let s = w.s.unwrap();
                        assert_eq!(&Mat::identity(z3, m) - &(&spec.b * &s), g.block(0, m, 0, m));
                        assert_eq!(&spec.b * &w.v, g.block(0, m, m, 2));
                    }
                }
            }
        }
    }
}

#[test]
fn bullet_is_closed_and_covariant() {
    let z9 = RingCtx::new(3, 2).unwrap();
    let mut r = rng(21);
    let b = Mat::from_rows(z9, &[vec![3, 0], vec![0, 1]]).unwrap();
    let c = Mat::from_rows(z9, &[vec![0, 3], vec![1, 0]]).unwrap();
    let spec = StabilizerSpec::new(b.kernel(), c.transpose().kernel(), 4).unwrap();
    // generators of the bullet group: GL on the tail and X(b, c)
    let x = coset_lab::idempotent::x_matrix(&spec.b, &spec.c).unwrap();
    let n = x.rows();
    let spec = StabilizerSpec { n, ..spec };
    for _ in 0..40 {
        let mut g = Mat::identity(z9, n);
        for _ in 0..4 {
            let tail = Mat::identity(z9, 2).direct_sum(&random_invertible(z9, n - 2, &mut r));
            g = &(&g * &tail) * &x;
        }
        assert!(membership(&g, &spec, Tier::Bullet).unwrap().0);
        assert!(membership(&g.try_inverse().unwrap(), &spec, Tier::Bullet).unwrap().0);
        let a = random_invertible(z9, 2, &mut r);
        let big = a.direct_sum(&Mat::identity(z9, n - 2));
        let moved = spec.act(&a).unwrap();
        let conj = &(&big.try_inverse().unwrap() * &g) * &big;
        for tier in [Tier::Hat, Tier::Circ, Tier::Bullet] {
            assert_eq!(membership(&g, &spec, tier).unwrap().0, membership(&conj, &moved, tier).unwrap().0);
        }
        let h = random_invertible(z9, n, &mut r);
        let hc = &(&big.try_inverse().unwrap() * &h) * &big;
        for tier in [Tier::Hat, Tier::Circ, Tier::Bullet] {
            assert_eq!(membership(&h, &spec, tier).unwrap().0, membership(&hc, &moved, tier).unwrap().0);
        }
    }
}

#[test]
fn quotient_is_a_group_and_normality_identity_holds() {
    let z9 = RingCtx::new(3, 2).unwrap();
    let b = Mat::from_rows(z9, &[vec![3, 0], vec![0, 0]]).unwrap();
    let c = Mat::from_rows(z9, &[vec![3, 0], vec![0, 3]]).unwrap();
    let spec = StabilizerSpec::new(b.kernel(), c.transpose().kernel(), 2).unwrap();
    let q = quotient_circ_bullet(&spec, 1 << 12).unwrap();
    assert_eq!(q.order * q.bullet.len(), q.circ.len());
    let mut r = rng(22);
    for a in &q.circ {
        let u = random_mat(z9, spec.b.cols(), spec.c.rows(), &mut r);
        if (&Mat::identity(z9, 2) - &(&(&spec.b * &u) * &spec.c)).is_invertible() {
            assert!(normality_identity(&spec, a, &u).unwrap());
        }
    }
    // representatives multiply to representatives of some coset
    for x in &q.reps {
        for y in &q.reps {
            let xy = x * y;
            assert!(q.reps.iter().filter(|z| q.bullet.contains(&(&z.try_inverse().unwrap() * &xy))).count() == 1);
        }
    }
}

#[test]
fn inverse_semigroup_checks() {
    let z3 = RingCtx::new(3, 1).unwrap();
    let end = enumerate_end(z3, 1);
    let mul = |a: &LMorphism, b: &LMorphism| a.l_compose(b).unwrap();
    let star = |a: &LMorphism| a.l_adjoint();
    let s = closure_with(&end, mul, Some(star), 100);
    assert_eq!(s.len(), 7);
    assert_eq!(is_inverse_semigroup(&s, mul, star).unwrap(), None);

    let two = closure(&[Mat::scalar(z3, 1, 2)], Law::Group, 10).unwrap();
    assert_eq!(is_inverse_semigroup(&two, |a: &Mat, b: &Mat| a * b, |a: &Mat| a.clone()).unwrap(), None);

    // raw Γ(1) representatives violate the axioms
    let mut r = rng(23);
    let sample: Vec<DoubleCoset> = (0..30).map(|_| random_coset(z3, 1, 1, 3, &mut r)).collect();
    let v = axiom_violation(
        &sample,
        |a, b| a.compose(b).unwrap(),
        |a| a.involution(),
        |a, b| a.equivalent(b, 1 << 20).unwrap(),
    );
    assert!(v.is_some());
}

#[test]
fn identity_suite_all_levels() {
    let mut r = rng(24);
    for mu in 1..=2 {
        let ctx = RingCtx::new(3, mu).unwrap();
        for rep in proof_identity_suite(ctx, 2, 40, &mut r) {
            assert!(rep.ok(), "{rep:?}");
        }
    }
}
