mod common;

use coset_lab::coset::{iota_embed, lambda, lambda_star};
use coset_lab::linalg::general_linear;
use coset_lab::{DoubleCoset, RingCtx};
use common::*;

#[test]
fn equivalence_matches_brute_force() {
    let z3 = RingCtx::new(3, 1).unwrap();
    let mut r = rng(11);
    let mut agree_true = 0;
    for _ in 0..300 {
        let n = 2 + (rand::Rng::gen_range(&mut r, 0..2));
        let alpha = rand::Rng::gen_range(&mut r, 0..=n.min(2));
        let beta = rand::Rng::gen_range(&mut r, 0..=n.min(2));
        let g1 = random_coset(z3, alpha, beta, n, &mut r);
        // half the time compare with a disguised copy
        let g2 = if rand::Rng::gen_bool(&mut r, 0.5) {
            let u = random_invertible(z3, 3 - alpha, &mut r);
            let v = random_invertible(z3, 3 - beta, &mut r);
            let left = coset_lab::Mat::identity(z3, alpha).direct_sum(&u);
            let right = coset_lab::Mat::identity(z3, beta).direct_sum(&v);
            coset_lab::DoubleCoset::new(alpha, beta, &(&left * &g1.padded(3)) * &right).unwrap()
        } else {
            random_coset(z3, alpha, beta, n, &mut r)
        };
        let fast = g1.equivalent(&g2, 1 << 24).unwrap();
        assert_eq!(fast, brute_equivalent(&g1, &g2), "{g1:?} vs {g2:?}");
        agree_true += fast as usize;
    }
    assert!(agree_true > 100);
}

#[test]
fn iota_is_conjugation_by_lambda() {
    let ctx = RingCtx::new(3, 1).unwrap();
    let (l, ls) = (lambda(ctx, 2, 1).unwrap(), lambda_star(ctx, 2, 1).unwrap());
    for a in general_linear(ctx, 2, 100).unwrap().iter() {
        let g = DoubleCoset::new(1, 1, a.clone()).unwrap();
        let conj = ls.compose(&g).unwrap().compose(&l).unwrap();
        assert!(brute_equivalent(&iota_embed(&g, 2).unwrap(), &conj), "{g:?}");
    }
}
