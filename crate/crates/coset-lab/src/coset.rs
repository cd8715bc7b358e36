//! Double cosets G(alpha) \ G / G(beta) with finitary representatives.
//!
//! A coset `beta -> alpha` is stored as an N x N invertible matrix whose top-left
//! block is alpha x beta. Everything beyond N is the identity.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::partial_iso;
use crate::ring::RingCtx;
use crate::submodule::Submodule;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;

const SAMPLES: usize = 256;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DoubleCoset {
    alpha: usize,
    beta: usize,
    rep: Mat,
}

/// `theta^beta(j)` at total size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaSpec {
    pub beta: usize,
    pub j: usize,
    pub n: usize,
}

impl ThetaSpec {
    pub fn build(&self, ctx: RingCtx) -> Result<Mat> {
        let ThetaSpec { beta, j, n } = *self;
        if beta + 2 * j > n {
            return Err(Error::BadSizes(format!("beta + 2j = {} exceeds {n}", beta + 2 * j)));
        }
        let mut m = Mat::identity(ctx, n);
        for i in 0..j {
            let (x, y) = (beta + i, beta + j + i);
            m.set(x, x, 0);
            m.set(y, y, 0);
            m.set(x, y, 1);
            m.set(y, x, 1);
        }
        Ok(m)
    }
}

impl DoubleCoset {
    pub fn new(alpha: usize, beta: usize, rep: Mat) -> Result<DoubleCoset> {
        if !rep.is_square() {
            return Err(Error::NotSquare);
        }
        if rep.rows() < alpha.max(beta) {
            return Err(Error::BadSizes(format!(
                "representative of size {} for labels ({alpha}, {beta})",
                rep.rows()
            )));
        }
        if !rep.is_invertible() {
            return Err(Error::NotInvertible);
        }
        Ok(DoubleCoset { alpha, beta, rep }.normalize())
    }

    pub fn identity(ctx: RingCtx, alpha: usize) -> DoubleCoset {
        DoubleCoset { alpha, beta: alpha, rep: Mat::identity(ctx, alpha) }
    }

    /// `[A 0; 0 1]` for an automorphism `A` of the object `alpha`.
    pub fn automorphism(a: &Mat) -> Result<DoubleCoset> {
        DoubleCoset::new(a.rows(), a.rows(), a.clone())
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn rep(&self) -> &Mat {
        &self.rep
    }

    pub fn ctx(&self) -> RingCtx {
        self.rep.ctx()
    }

    pub fn size(&self) -> usize {
        self.rep.rows()
    }

    /// Representative padded with an identity tail to size `n`.
    pub fn padded(&self, n: usize) -> Mat {
        self.rep.pad_identity(n.max(self.size()))
    }

    /// `(a, b, c, d)` of the representative at its stored size.
    pub fn blocks(&self) -> (Mat, Mat, Mat, Mat) {
        split(&self.rep, self.alpha, self.beta)
    }

    /// Strip trailing coordinates on which the representative is the identity.
    pub fn normalize(&self) -> DoubleCoset {
        let mut rep = self.rep.clone();
        let floor = self.alpha.max(self.beta);
        while rep.rows() > floor {
            let n = rep.rows() - 1;
            let trivial = (0..=n).all(|k| {
                let e = u64::from(k == n);
                rep.get(n, k) == e && rep.get(k, n) == e
            });
            if !trivial {
                break;
            }
            rep = rep.block(0, n, 0, n);
        }
        DoubleCoset { alpha: self.alpha, beta: self.beta, rep }
    }

    /// `self ∘ other` via the block formula `[ap b aq; cp d cq; r 0 t]`.
    pub fn compose(&self, other: &DoubleCoset) -> Result<DoubleCoset> {
        if self.beta != other.alpha {
            return Err(Error::ObjectMismatch);
        }
        if self.ctx() != other.ctx() {
            return Err(Error::MixedContext);
        }
        let (a, b, c, d) = self.blocks();
        let (p, q, r, t) = other.blocks();
        let ctx = self.ctx();
        let zero = Mat::zeros(ctx, r.rows(), b.cols());
        let rep = Mat::block_compose(&[
            vec![&a * &p, b.clone(), &a * &q],
            vec![&c * &p, d.clone(), &c * &q],
            vec![r.clone(), zero, t.clone()],
        ])?;
        Ok(DoubleCoset { alpha: self.alpha, beta: other.beta, rep }.normalize())
    }

    /// `g1 * theta^beta(j) * g2` as a coset `gamma -> alpha`, everything padded to a common size.
    pub fn literal_product(&self, other: &DoubleCoset, j: usize) -> Result<DoubleCoset> {
        if self.beta != other.alpha {
            return Err(Error::ObjectMismatch);
        }
        let n = self.size().max(other.size()).max(self.beta + 2 * j);
        let theta = ThetaSpec { beta: self.beta, j, n }.build(self.ctx())?;
        let rep = &(&self.padded(n) * &theta) * &other.padded(n);
        Ok(DoubleCoset { alpha: self.alpha, beta: other.beta, rep }.normalize())
    }

    /// Smallest `j` for which the literal product has reached its limit.
    pub fn stable_j(&self, other: &DoubleCoset) -> usize {
        self.size().max(other.size()) - self.beta
    }

    /// The class of `g^{-1}` with the labels swapped.
    pub fn involution(&self) -> DoubleCoset {
        let rep = self.rep.try_inverse().expect("representatives are invertible");
        DoubleCoset { alpha: self.beta, beta: self.alpha, rep }.normalize()
    }

    /// The class of `g^{t-1}`.
    pub fn star_auto(&self) -> DoubleCoset {
        let rep = self.rep.try_inverse().expect("representatives are invertible").transpose();
        DoubleCoset { alpha: self.alpha, beta: self.beta, rep }.normalize()
    }

    /// Decide `rep2 = diag(1, u) rep1 diag(1, v)` for some invertible `u`, `v`.
    ///
    /// `cap` bounds the number of candidates examined after the linear constraints are solved.
    pub fn equivalent(&self, other: &DoubleCoset, cap: u128) -> Result<bool> {
        Ok(self.find_equivalence(other, cap)?.is_some())
    }

    /// A witness `(u, v)` for [`DoubleCoset::equivalent`], at the common padded size.
    pub fn find_equivalence(&self, other: &DoubleCoset, cap: u128) -> Result<Option<(Mat, Mat)>> {
        if self.ctx() != other.ctx() {
            return Err(Error::MixedContext);
        }
        if (self.alpha, self.beta) != (other.alpha, other.beta) {
            return Ok(None);
        }
        let n = self.size().max(other.size());
        let (alpha, beta) = (self.alpha, self.beta);
        let g1 = self.padded(n);
        let g2 = other.padded(n);
        if g1.block(0, alpha, 0, beta) != g2.block(0, alpha, 0, beta) {
            return Ok(None);
        }
        if !partial_iso::pi_functor(self).l_equal(&partial_iso::pi_functor(other)) {
            return Ok(None);
        }
        let ctx = self.ctx();
        let g1inv = g1.try_inverse()?;
        // H(v') = g2 diag(1, v') g1^{-1} = h0 + P v' Q must equal diag(1_alpha, u)
        let h0 = &g2.block(0, n, 0, beta) * &g1inv.block(0, beta, 0, n);
        let pm = g2.block(0, n, beta, n);
        let qm = g1inv.block(beta, n, 0, n);
        let k = n - beta;
        let mut eqs: Vec<(usize, usize)> = Vec::new();
        for i in 0..n {
            for jj in 0..n {
                if i < alpha || jj < alpha {
                    eqs.push((i, jj));
                }
            }
        }
        let mut a = Mat::zeros(ctx, k * k, eqs.len());
        let mut rhs = vec![0u64; eqs.len()];
        for (e, &(i, jj)) in eqs.iter().enumerate() {
            let target = u64::from(i == jj);
            rhs[e] = ctx.sub(target, h0.get(i, jj));
            for x in 0..k {
                let pix = pm.get(i, x);
                if pix == 0 {
                    continue;
                }
                for y in 0..k {
                    a.set(x * k + y, e, ctx.mul(pix, qm.get(y, jj)));
                }
            }
        }
        if eqs.is_empty() {
            a = Mat::zeros(ctx, k * k, 0);
        }
        let Some(x0) = solve_or_free(&a, &rhs, k * k) else {
            return Ok(None);
        };
        let kernel = if eqs.is_empty() { Submodule::full(ctx, k * k) } else { a.kernel() };
        let basis = mod_p_basis(ctx, kernel.generators());
        let size = (ctx.p() as u128).saturating_pow(basis.len() as u32);
        let build = |coeffs: &[u64]| -> Mat {
            let mut v = x0.clone();
            for (b, &t) in basis.iter().zip(coeffs) {
                if t != 0 {
                    for (vi, &bi) in v.iter_mut().zip(b) {
                        *vi = ctx.add(*vi, ctx.mul(t, bi));
                    }
                }
            }
            Mat::from_vec(ctx, k, k, v).expect("k x k")
        };
        let digits = |mut idx: u128| -> Vec<u64> {
            (0..basis.len())
                .map(|_| {
                    let t = (idx % ctx.p() as u128) as u64;
                    idx /= ctx.p() as u128;
                    t
                })
                .collect()
        };
        let witness = |vprime: Mat| {
            let v = vprime.try_inverse().expect("checked invertible");
            let h = &h0 + &(&(&pm * &vprime) * &qm);
            (h.block(alpha, n, alpha, n), v)
        };
        // invertible points are dense when they exist; sampling usually finds one fast
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..SAMPLES {
            let coeffs: Vec<u64> = (0..basis.len()).map(|_| rng.gen_range(0..ctx.p())).collect();
            let v = build(&coeffs);
            if v.is_invertible() {
                return Ok(Some(witness(v)));
            }
        }
        if size > cap {
            return Err(Error::SearchSpaceTooLarge { size, cap });
        }
        let hit = if size > 4096 {
            (0..size as u64).into_par_iter().find_first(|&i| build(&digits(i as u128)).is_invertible())
        } else {
            (0..size as u64).find(|&i| build(&digits(i as u128)).is_invertible())
        };
        Ok(hit.map(|i| witness(build(&digits(i as u128)))))
    }
}

fn solve_or_free(a: &Mat, rhs: &[u64], len: usize) -> Option<Vec<u64>> {
    if a.cols() == 0 {
        return Some(vec![0; len]);
    }
    a.solve_row(rhs)
}

/// Elements of `gens` whose reductions mod p form a basis of the reduced span.
fn mod_p_basis(ctx: RingCtx, gens: &Mat) -> Vec<Vec<u64>> {
    let p = ctx.p();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    let fp = ctx.at_level(1).expect("level 1");
    for g in gens.to_rows() {
        let mut r: Vec<u64> = g.iter().map(|x| x % p).collect();
        for (piv, row) in &echelon {
            let f = r[*piv];
            if f != 0 {
                for (x, &y) in r.iter_mut().zip(row) {
                    *x = fp.sub(*x, fp.mul(f, y));
                }
            }
        }
        if let Some(piv) = r.iter().position(|&x| x != 0) {
            let inv = fp.inv(r[piv]).expect("nonzero in a field");
            for x in r.iter_mut() {
                *x = fp.mul(*x, inv);
            }
            for (_, row) in echelon.iter_mut() {
                let f = row[piv];
                if f != 0 {
                    for (x, &y) in row.iter_mut().zip(&r) {
                        *x = fp.sub(*x, fp.mul(f, y));
                    }
                }
            }
            echelon.push((piv, r));
            basis.push(g);
        }
    }
    basis
}

/// Split a square matrix into `(a, b, c, d)` with `a` of size `alpha x beta`.
pub fn split(g: &Mat, alpha: usize, beta: usize) -> (Mat, Mat, Mat, Mat) {
    let n = g.rows();
    (
        g.block(0, alpha, 0, beta),
        g.block(0, alpha, beta, n),
        g.block(alpha, n, 0, beta),
        g.block(alpha, n, beta, n),
    )
}

/// `(v g, w g^{t-1})`; the pairing `sum v_j w_j` is preserved.
pub fn pair_action(g: &Mat, v: &[u64], w: &[u64]) -> Result<(Vec<u64>, Vec<u64>)> {
    if v.len() != g.rows() || w.len() != g.rows() {
        return Err(Error::SizeMismatch("vector length differs from matrix size".into()));
    }
    let gi = g.try_inverse()?;
    let ctx = g.ctx();
    let vg = &Mat::row_vector(ctx, v) * g;
    let wg = &Mat::row_vector(ctx, w) * &gi.transpose();
    Ok((vg.row(0), wg.row(0)))
}

pub fn pairing(ctx: RingCtx, v: &[u64], w: &[u64]) -> u64 {
    v.iter().zip(w).fold(0, |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)))
}

/// `Theta^alpha_[m]`: the class of `theta^alpha(m - alpha)` in Γ(m).
pub fn theta_idempotent(ctx: RingCtx, m: usize, alpha: usize) -> Result<DoubleCoset> {
    if alpha > m {
        return Err(Error::BadSizes(format!("alpha = {alpha} > m = {m}")));
    }
    let j = m - alpha;
    let rep = ThetaSpec { beta: alpha, j, n: alpha + 2 * j }.build(ctx)?;
    Ok(DoubleCoset { alpha: m, beta: m, rep }.normalize())
}

/// `Lambda^alpha_[m]`: identity representative, row split alpha, column split m.
pub fn lambda(ctx: RingCtx, m: usize, alpha: usize) -> Result<DoubleCoset> {
    if alpha > m {
        return Err(Error::BadSizes(format!("alpha = {alpha} > m = {m}")));
    }
    Ok(DoubleCoset { alpha, beta: m, rep: Mat::identity(ctx, m) })
}

/// `(Lambda^alpha_[m])^*`: identity representative, row split m, column split alpha.
pub fn lambda_star(ctx: RingCtx, m: usize, alpha: usize) -> Result<DoubleCoset> {
    Ok(lambda(ctx, m, alpha)?.involution())
}

/// `iota^alpha_m(g) = [a 0 b 0; 0 0 0 1; c 0 d 0; 0 1 0 0]` in Γ(m).
pub fn iota_embed(g: &DoubleCoset, m: usize) -> Result<DoubleCoset> {
    let alpha = g.alpha;
    if g.beta != alpha {
        return Err(Error::BadSizes("iota needs an endomorphism".into()));
    }
    if alpha > m {
        return Err(Error::BadSizes(format!("alpha = {alpha} > m = {m}")));
    }
    let ctx = g.ctx();
    let (a, b, c, d) = g.blocks();
    let e = m - alpha;
    let nd = d.rows();
    let z = |r, k| Mat::zeros(ctx, r, k);
    let one = Mat::identity(ctx, e);
    let rep = Mat::block_compose(&[
        vec![a, z(alpha, e), b, z(alpha, e)],
        vec![z(e, alpha), z(e, e), z(e, nd), one.clone()],
        vec![c, z(nd, e), d, z(nd, e)],
        vec![z(e, alpha), one, z(e, nd), z(e, e)],
    ])?;
    Ok(DoubleCoset { alpha: m, beta: m, rep }.normalize())
}

impl fmt::Debug for DoubleCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}->{}]{:?}", self.beta, self.alpha, self.rep.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> RingCtx {
        RingCtx::new(3, 1).unwrap()
    }

    fn mat(ctx: RingCtx, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(ctx, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn normalize_strips_identity_tail() {
        let g = mat(z3(), &[&[1, 1], &[1, 2]]);
        let c = DoubleCoset::new(1, 1, g.pad_identity(7)).unwrap();
        assert_eq!(c.rep(), &g);
        assert_eq!(DoubleCoset::new(1, 1, g.clone()).unwrap().normalize().rep(), &g);
    }

    #[test]
    fn block_form_of_product() {
        let ctx = RingCtx::new(3, 2).unwrap();
        let g1 = DoubleCoset::new(1, 1, mat(ctx, &[&[2, 1], &[1, 1]])).unwrap();
        let g2 = DoubleCoset::new(1, 1, mat(ctx, &[&[1, 3], &[4, 1]])).unwrap();
        // at j = N - beta the literal product is [ap aq b; cp cq d; r t 0]
        let lit = g1.literal_product(&g2, 1).unwrap();
        let expected = mat(ctx, &[&[2, 6, 1], &[1, 3, 1], &[4, 1, 0]]);
        assert_eq!(lit.rep(), &expected);
        let blk = g1.compose(&g2).unwrap();
        assert_eq!(blk.rep(), &mat(ctx, &[&[2, 1, 6], &[1, 1, 3], &[4, 0, 1]]));
        assert!(lit.equivalent(&blk, 1 << 20).unwrap());
    }

    #[test]
    fn identity_is_neutral() {
        let g = DoubleCoset::new(1, 1, mat(z3(), &[&[0, 1], &[1, 0]])).unwrap();
        let id = DoubleCoset::identity(z3(), 1);
        assert!(id.compose(&g).unwrap().equivalent(&g, 1 << 20).unwrap());
        assert!(g.compose(&id).unwrap().equivalent(&g, 1 << 20).unwrap());
    }

    #[test]
    fn involution_of_unipotent() {
        let g = DoubleCoset::new(1, 1, mat(z3(), &[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(g.involution().rep(), &mat(z3(), &[&[1, 2], &[0, 1]]));
        let id = DoubleCoset::identity(z3(), 2);
        assert_eq!(id.involution(), id);
        assert_eq!(id.star_auto(), id);
    }

    #[test]
    fn special_cosets() {
        assert_eq!(theta_idempotent(z3(), 2, 2).unwrap(), DoubleCoset::identity(z3(), 2));
        let l = lambda(z3(), 3, 1).unwrap();
        let ls = lambda_star(z3(), 3, 1).unwrap();
        let id = l.compose(&ls).unwrap();
        assert_eq!(id, DoubleCoset::identity(z3(), 1));
        let th = theta_idempotent(z3(), 2, 1).unwrap();
        assert!(th.compose(&th).unwrap().equivalent(&th, 1 << 20).unwrap());
        let th3 = theta_idempotent(z3(), 3, 1).unwrap();
        assert_eq!(ls.compose(&l).unwrap(), th3);
    }

    #[test]
    fn pair_action_preserves_pairing() {
        let ctx = RingCtx::new(3, 2).unwrap();
        let g = mat(ctx, &[&[2, 1], &[7, 3]]);
        let (v, w) = pair_action(&g, &[1, 0], &[0, 1]).unwrap();
        assert_eq!(pairing(ctx, &v, &w), 0);
        let (v, w) = pair_action(&Mat::identity(ctx, 2), &[4, 5], &[1, 2]).unwrap();
        assert_eq!((v, w), (vec![4, 5], vec![1, 2]));
    }
}
