#![allow(dead_code)]

use coset_lab::linalg::general_linear;
use coset_lab::{DoubleCoset, Mat, RingCtx};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mat(ctx: RingCtx, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Mat {
    Mat::from_fn(ctx, rows, cols, |_, _| rng.gen_range(0..ctx.modulus()) as i64)
}

pub fn random_invertible(ctx: RingCtx, n: usize, rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let m = random_mat(ctx, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_coset(ctx: RingCtx, alpha: usize, beta: usize, n: usize, rng: &mut ChaCha8Rng) -> DoubleCoset {
    DoubleCoset::new(alpha, beta, random_invertible(ctx, n, rng)).unwrap()
}

/// Exhaustive search over v' in GL(N - beta): is g2 diag(1, v') g1^{-1} of the form diag(1, u)?
pub fn brute_equivalent(g1: &DoubleCoset, g2: &DoubleCoset) -> bool {
    if (g1.alpha(), g1.beta()) != (g2.alpha(), g2.beta()) {
        return false;
    }
    let (alpha, beta) = (g1.alpha(), g1.beta());
    let n = g1.size().max(g2.size());
    let a_inv = g1.padded(n).try_inverse().unwrap();
    let b = g2.padded(n);
    let ctx = b.ctx();
    let table = general_linear(ctx, n - beta, 1 << 20).unwrap();
    let ok = |v: &Mat| {
        let h = &(&b * &Mat::identity(ctx, beta).direct_sum(v)) * &a_inv;
        (0..n).all(|i| (0..n).all(|j| if i < alpha || j < alpha { h.get(i, j) == u64::from(i == j) } else { true }))
    };
    if n == beta {
        return ok(&Mat::identity(ctx, 0));
    }
    table.iter().any(ok)
}

/// Equivalence with an independently checked certificate.
///
/// Small cases go through [`brute_equivalent`]. Otherwise a positive answer is a witness
/// `(u, v)` checked by multiplication, and a negative one must come with a differing
/// invariant (the `alpha x beta` block or the Π-image).
pub fn certified_equivalent(g1: &DoubleCoset, g2: &DoubleCoset) -> bool {
    let n = g1.size().max(g2.size());
    if n - g1.beta() <= 2 && g1.ctx().modulus() <= 9 || n - g1.beta() <= 3 && g1.ctx().modulus() == 3 {
        return brute_equivalent(g1, g2);
    }
    if (g1.alpha(), g1.beta()) != (g2.alpha(), g2.beta()) {
        return false;
    }
    let (alpha, beta) = (g1.alpha(), g1.beta());
    let ctx = g1.ctx();
    match g1.find_equivalence(g2, 1 << 26).unwrap() {
        Some((u, v)) => {
            let lhs = &(&Mat::identity(ctx, alpha).direct_sum(&u) * &g1.padded(n)) * &Mat::identity(ctx, beta).direct_sum(&v);
            assert_eq!(lhs, g2.padded(n), "witness does not conjugate");
            true
        }
        None => {
            let blocks_differ = g1.padded(n).block(0, alpha, 0, beta) != g2.padded(n).block(0, alpha, 0, beta);
            let pi_differ = coset_lab::partial_iso::pi_functor(g1) != coset_lab::partial_iso::pi_functor(g2);
            assert!(blocks_differ || pi_differ, "negative answer without an invariant certificate");
            false
        }
    }
}
