//! Submodules of (Z/p^mu)^m in Howell echelon form.

use crate::error::{Error, Result};
use crate::linalg::{Mat, Side};
use crate::ring::RingCtx;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// A row span, stored canonically: equal submodules have identical `canon`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    ctx: RingCtx,
    rank: usize,
    canon: Mat,
    pivots: Vec<(usize, u32)>,
}

fn howell(ctx: RingCtx, m: usize, rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<(usize, u32)>) {
    let mu = ctx.mu();
    let mut pool: Vec<Vec<u64>> = rows.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut pivots = Vec::new();
    for j in 0..m {
        let best = pool
            .iter()
            .enumerate()
            .map(|(i, r)| (ctx.valuation(r[j]), i))
            .filter(|&(v, _)| v < mu)
            .min();
        let Some((s, bi)) = best else { continue };
        let mut prow = pool.swap_remove(bi);
        let ps = ctx.p_pow(s);
        let unit_inv = ctx.inv(prow[j] / ps).expect("cofactor is a unit");
        for x in prow.iter_mut() {
            *x = ctx.mul(*x, unit_inv);
        }
        for r in pool.iter_mut() {
            let f = r[j] / ps;
            if f != 0 {
                for (x, &y) in r.iter_mut().zip(&prow) {
                    *x = ctx.sub(*x, ctx.mul(f, y));
                }
            }
        }
        // p^(mu-s) * pivot row vanishes at column j but may not vanish to the right
        let lift = ctx.p_pow(mu - s);
        let aug: Vec<u64> = prow.iter().map(|&x| ctx.mul(x, lift)).collect();
        pool.push(aug);
        pool.retain(|r| r.iter().any(|&x| x != 0));
        out.push(prow);
        pivots.push((j, s));
    }
    for t in 0..out.len() {
        let (j, s) = pivots[t];
        let ps = ctx.p_pow(s);
        let prow = out[t].clone();
        for above in out.iter_mut().take(t) {
            let f = above[j] / ps;
            if f != 0 {
                for (x, &y) in above.iter_mut().zip(&prow) {
                    *x = ctx.sub(*x, ctx.mul(f, y));
                }
            }
        }
    }
    (out, pivots)
}

impl Submodule {
    pub fn from_generators(rows: &Mat) -> Submodule {
        Submodule::from_vectors(rows.ctx(), rows.cols(), &rows.to_rows())
    }

    pub fn from_vectors(ctx: RingCtx, rank: usize, vectors: &[Vec<u64>]) -> Submodule {
        let rows: Vec<Vec<u64>> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), rank, "generator length differs from ambient rank");
                v.iter().map(|x| x % ctx.modulus()).collect()
            })
            .collect();
        let (canon_rows, pivots) = howell(ctx, rank, rows);
        let data = canon_rows.concat();
        let canon = Mat::from_vec(ctx, canon_rows.len(), rank, data).expect("consistent shape");
        Submodule { ctx, rank, canon, pivots }
    }

    pub fn zero(ctx: RingCtx, rank: usize) -> Submodule {
        Submodule::from_vectors(ctx, rank, &[])
    }

    pub fn full(ctx: RingCtx, rank: usize) -> Submodule {
        Submodule::from_generators(&Mat::identity(ctx, rank))
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    /// Canonical generator matrix.
    pub fn generators(&self) -> &Mat {
        &self.canon
    }

    pub fn is_zero(&self) -> bool {
        self.canon.rows() == 0
    }

    /// Elementary-divisor exponents below mu, sorted.
    pub fn invariants(&self) -> Vec<u32> {
        let mu = self.ctx.mu();
        self.canon.smith_diagonal().exponents.into_iter().filter(|&s| s < mu).collect()
    }

    pub fn order(&self) -> u64 {
        self.pivots.iter().map(|&(_, s)| self.ctx.p().pow(self.ctx.mu() - s)).product()
    }

    fn check_rank(&self, other: &Submodule) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::MixedContext);
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch);
        }
        Ok(())
    }

    /// Membership by reduction against the echelon rows.
    pub fn contains(&self, v: &[u64]) -> Result<bool> {
        if v.len() != self.rank {
            return Err(Error::RankMismatch);
        }
        let c = self.ctx;
        let mut w: Vec<u64> = v.iter().map(|x| x % c.modulus()).collect();
        for (t, &(j, s)) in self.pivots.iter().enumerate() {
            let ps = c.p_pow(s);
            if w[j] % ps != 0 {
                return Ok(false);
            }
            let f = w[j] / ps;
            if f != 0 {
                for (x, y) in w.iter_mut().zip(self.canon.row(t)) {
                    *x = c.sub(*x, c.mul(f, y));
                }
            }
        }
        Ok(w.iter().all(|&x| x == 0))
    }

    pub fn is_subset(&self, other: &Submodule) -> Result<bool> {
        self.check_rank(other)?;
        for i in 0..self.canon.rows() {
            if !other.contains(&self.canon.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_rank(other)?;
        let mut rows = self.canon.to_rows();
        rows.extend(other.canon.to_rows());
        Ok(Submodule::from_vectors(self.ctx, self.rank, &rows))
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_rank(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Submodule::zero(self.ctx, self.rank));
        }
        // x*G1 = y*G2  <=>  (x, y) * [G1; -G2] = 0
        let g1 = &self.canon;
        let k1 = g1.rows();
        let stacked = g1.vstack(&other.canon.neg());
        let ker = stacked.kernel();
        let xs = ker.generators().block(0, ker.generators().rows(), 0, k1);
        Ok(Submodule::from_generators(&(&xs * g1)))
    }

    /// A square matrix whose left kernel is exactly this submodule.
    pub fn as_kernel(&self) -> Mat {
        let m = self.rank;
        let c = self.ctx;
        if self.is_zero() {
            return Mat::identity(c, m);
        }
        let sd = self.canon.smith_diagonal();
        let vinv = sd.v.try_inverse().expect("smith V is invertible");
        let mut diag = Mat::zeros(c, m, m);
        for i in 0..m {
            let s = sd.exponents.get(i).copied().unwrap_or(c.mu());
            diag.set(i, i, c.p_pow(c.mu() - s));
        }
        &vinv * &diag
    }

    /// The image `{ v * g : v in L }`.
    pub fn act(&self, g: &Mat) -> Result<Submodule> {
        if g.rows() != self.rank || !g.is_square() {
            return Err(Error::DimMismatch("acting matrix must be m x m".into()));
        }
        if !g.is_invertible() {
            return Err(Error::NotInvertible);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        Ok(Submodule::from_generators(&(&self.canon * g)))
    }

    /// Every element, sorted.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let c = self.ctx;
        let bounds: Vec<u64> = self.pivots.iter().map(|&(_, s)| c.p().pow(c.mu() - s)).collect();
        let mut out = BTreeSet::new();
        let mut coeff = vec![0u64; bounds.len()];
        loop {
            let mut v = vec![0u64; self.rank];
            for (t, &k) in coeff.iter().enumerate() {
                if k != 0 {
                    for (x, y) in v.iter_mut().zip(self.canon.row(t)) {
                        *x = c.add(*x, c.mul(k, y));
                    }
                }
            }
            out.insert(v);
            let mut i = 0;
            loop {
                if i == coeff.len() {
                    return out.into_iter().collect();
                }
                coeff[i] += 1;
                if coeff[i] < bounds[i] {
                    break;
                }
                coeff[i] = 0;
                i += 1;
            }
        }
    }

    /// All submodules of (Z/p^mu)^m: cyclic spans closed under sums.
    pub fn enumerate_all(ctx: RingCtx, m: usize) -> Vec<Submodule> {
        let mut seen: HashSet<Submodule> = HashSet::new();
        let mut order: Vec<Submodule> = Vec::new();
        for v in crate::linalg::all_matrices(ctx, 1, m) {
            let s = Submodule::from_generators(&v);
            if seen.insert(s.clone()) {
                order.push(s);
            }
        }
        let cyclic = order.clone();
        let mut i = 0;
        while i < order.len() {
            let cur = order[i].clone();
            for cy in &cyclic {
                let s = cur.sum(cy).expect("same rank");
                if seen.insert(s.clone()) {
                    order.push(s);
                }
            }
            i += 1;
        }
        order.sort_by_key(|s| (s.order(), s.canon.to_rows()));
        order
    }
}

/// `u` with `b * u = b_prime`; invertible whenever the left kernels agree.
pub fn factor_through(b: &Mat, b_prime: &Mat) -> Result<Mat> {
    if b.rows() != b_prime.rows() {
        return Err(Error::DimMismatch("factor_through needs equal row counts".into()));
    }
    let kb = b.kernel();
    let kbp = b_prime.kernel();
    if !kb.is_subset(&kbp)? {
        return Err(Error::NoFactor);
    }
    let u0 = b.solve_linear(b_prime, Side::Right).map_err(|_| Error::NoFactor)?;
    if kb != kbp || b.cols() != b_prime.cols() || u0.is_invertible() {
        return Ok(u0);
    }
    // Search u0 + (columns from the right kernel of b), modulo p.
    let c = b.ctx();
    let right_ker = b.transpose().kernel();
    let gens: Vec<Vec<u64>> = right_ker
        .generators()
        .to_rows()
        .into_iter()
        .filter(|g| g.iter().any(|&x| x % c.p() != 0))
        .collect();
    let n = u0.cols();
    let slots = gens.len() * n;
    let space = (c.p() as u128).saturating_pow(slots as u32);
    let cap = 1u128 << 22;
    if space > cap {
        return Err(Error::SearchSpaceTooLarge { size: space, cap });
    }
    let mut t = vec![0u64; slots];
    loop {
        let mut u = u0.clone();
        for col in 0..n {
            for (gi, g) in gens.iter().enumerate() {
                let k = t[col * gens.len() + gi];
                if k != 0 {
                    for (row, &x) in g.iter().enumerate() {
                        u.set(row, col, c.add(u.get(row, col), c.mul(k, x)));
                    }
                }
            }
        }
        if u.is_invertible() {
            return Ok(u);
        }
        let mut i = 0;
        loop {
            if i == slots {
                return Ok(u0);
            }
            t[i] += 1;
            if t[i] < c.p() {
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule[{}^{}]{:?}", self.ctx, self.rank, self.canon.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z9() -> RingCtx {
        RingCtx::new(3, 2).unwrap()
    }

    fn span(ctx: RingCtx, m: usize, v: &[&[u64]]) -> Submodule {
        Submodule::from_vectors(ctx, m, &v.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn canonical_examples() {
        let full = Submodule::from_generators(&Mat::identity(z9(), 2));
        assert_eq!(full.invariants(), vec![0, 0]);
        assert_eq!(span(z9(), 2, &[&[3, 3]]).invariants(), vec![1]);
        let l = span(z9(), 2, &[&[1, 1], &[1, 4]]);
        assert_eq!(l, span(z9(), 2, &[&[1, 1], &[0, 3]]));
        assert_eq!(l.order(), 27);
        assert_ne!(l, full);
        let l = span(z9(), 2, &[&[6, 3], &[3, 0]]);
        assert_eq!(Submodule::from_generators(l.generators()), l);
    }

    #[test]
    fn intersection_examples() {
        let a = span(z9(), 2, &[&[1, 1]]);
        let b = span(z9(), 2, &[&[1, 4]]);
        assert_eq!(a.intersect(&b).unwrap(), span(z9(), 2, &[&[3, 3]]));
        let e1 = span(z9(), 2, &[&[1, 0]]);
        let e2 = span(z9(), 2, &[&[0, 1]]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(a.intersect(&Submodule::full(z9(), 2)).unwrap(), a);
    }

    #[test]
    fn containment_examples() {
        let l = span(z9(), 1, &[&[3]]);
        assert!(l.contains(&[6]).unwrap());
        assert!(!l.contains(&[1]).unwrap());
        assert!(l.is_subset(&l).unwrap());
        assert!(span(z9(), 2, &[&[3, 0]]).is_subset(&span(z9(), 2, &[&[1, 0]])).unwrap());
        assert_eq!(l.is_subset(&Submodule::zero(z9(), 2)), Err(Error::RankMismatch));
    }

    #[test]
    fn as_kernel_examples() {
        let m = |x: i64| Mat::from_rows(z9(), &[vec![x]]).unwrap();
        assert_eq!(span(z9(), 1, &[&[3]]).as_kernel(), m(3));
        assert_eq!(Submodule::zero(z9(), 1).as_kernel(), m(1));
        assert_eq!(Submodule::full(z9(), 1).as_kernel(), m(0));
    }

    #[test]
    fn factor_examples() {
        let m = |x: i64| Mat::from_rows(z9(), &[vec![x]]).unwrap();
        let u = factor_through(&m(3), &m(6)).unwrap();
        assert_eq!(&m(3) * &u, m(6));
        assert!(u.is_invertible());
        assert_eq!(factor_through(&m(1), &m(3)).unwrap(), m(3));
        assert_eq!(factor_through(&m(3), &m(1)), Err(Error::NoFactor));
    }

    #[test]
    fn act_examples() {
        let swap = Mat::from_rows(z9(), &[vec![0, 1], vec![1, 0]]).unwrap();
        let e1 = span(z9(), 2, &[&[1, 0]]);
        assert_eq!(e1.act(&swap).unwrap(), span(z9(), 2, &[&[0, 1]]));
        assert_eq!(e1.act(&Mat::identity(z9(), 2)).unwrap(), e1);
    }

    #[test]
    fn enumeration_counts() {
        let z3 = RingCtx::new(3, 1).unwrap();
        assert_eq!(Submodule::enumerate_all(z3, 2).len(), 6);
        assert_eq!(Submodule::enumerate_all(z9(), 1).len(), 3);
        for l in Submodule::enumerate_all(z9(), 2) {
            assert_eq!(l.elements().len() as u64, l.order());
        }
    }
}
