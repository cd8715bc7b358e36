//! Idempotents X(b,c), the classes X[L,M], and the normal-form algorithms around them.

use crate::coset::DoubleCoset;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::partial_iso::{pi_functor, LMorphism, PartialIso};
use crate::ring::RingCtx;
use crate::submodule::Submodule;

/// The class X[L, M] with `L = ker b`, `M = ker c^t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XIdempotent {
    pub l: Submodule,
    pub m: Submodule,
}

impl XIdempotent {
    pub fn new(l: Submodule, m: Submodule) -> Result<XIdempotent> {
        if l.ambient_rank() != m.ambient_rank() {
            return Err(Error::RankMismatch);
        }
        Ok(XIdempotent { l, m })
    }

    pub fn from_pair(b: &Mat, c: &Mat) -> XIdempotent {
        let ctx = b.ctx();
        let l = kernel_rows(ctx, b);
        let m = kernel_rows(ctx, &c.transpose());
        XIdempotent { l, m }
    }

    /// X[full, full], the unit.
    pub fn unit(ctx: RingCtx, m: usize) -> XIdempotent {
        XIdempotent { l: Submodule::full(ctx, m), m: Submodule::full(ctx, m) }
    }

    pub fn rank(&self) -> usize {
        self.l.ambient_rank()
    }

    /// Kernel presentations `(b, c)` with `ker b = L`, `ker c^t = M`.
    pub fn presentation(&self) -> (Mat, Mat) {
        (self.l.as_kernel(), self.m.as_kernel().transpose())
    }

    pub fn to_coset(&self) -> DoubleCoset {
        let (b, c) = self.presentation();
        build_x(&b, &c).expect("presentation shapes are consistent")
    }

    pub fn product(&self, other: &XIdempotent) -> Result<XIdempotent> {
        Ok(XIdempotent { l: self.l.intersect(&other.l)?, m: self.m.intersect(&other.m)? })
    }

    /// `self ⪯ other` in the idempotent order.
    pub fn precedes(&self, other: &XIdempotent) -> Result<bool> {
        Ok(self.product(other)? == *self)
    }

    /// Identity partial isomorphisms on `(L, M)`.
    pub fn pi(&self) -> LMorphism {
        let ctx = self.l.ctx();
        let n = self.rank();
        LMorphism {
            xi_plus: PartialIso::new(self.l.clone(), Mat::identity(ctx, n)).expect("identity is injective"),
            xi_minus: PartialIso::new(self.m.clone(), Mat::identity(ctx, n)).expect("identity is injective"),
        }
    }

    /// Read `(L, M)` off a Π-image that is a pair of identities.
    pub fn from_pi(m: &LMorphism) -> Option<XIdempotent> {
        let id_on = |p: &PartialIso| {
            let g = p.domain().generators();
            g.rows() == 0 || &(g * p.matrix()) == g
        };
        if m.source() != m.target() || !id_on(&m.xi_plus) || !id_on(&m.xi_minus) {
            return None;
        }
        Some(XIdempotent { l: m.xi_plus.domain().clone(), m: m.xi_minus.domain().clone() })
    }
}

fn kernel_rows(ctx: RingCtx, m: &Mat) -> Submodule {
    if m.cols() == 0 {
        Submodule::full(ctx, m.rows())
    } else {
        m.kernel()
    }
}

/// `X(b, c) = [1_m b 0; 0 1 0; c 0 1]` as an element of Γ(m).
pub fn build_x(b: &Mat, c: &Mat) -> Result<DoubleCoset> {
    let x = x_matrix(b, c)?;
    DoubleCoset::new(b.rows(), b.rows(), x)
}

/// The raw matrix `X(b, c)`.
pub fn x_matrix(b: &Mat, c: &Mat) -> Result<Mat> {
    let m = b.rows();
    if c.cols() != m {
        return Err(Error::DimMismatch(format!("b is {}x{}, c is {}x{}", m, b.cols(), c.rows(), c.cols())));
    }
    let ctx = b.ctx();
    let (n, n2) = (b.cols(), c.rows());
    let z = |r, k| Mat::zeros(ctx, r, k);
    Mat::block_compose(&[
        vec![Mat::identity(ctx, m), b.clone(), z(m, n2)],
        vec![z(n, m), Mat::identity(ctx, n), z(n, n2)],
        vec![c.clone(), z(n2, n), Mat::identity(ctx, n2)],
    ])
}

/// `(zeta a zeta^{-1})^n = diag(0_{m-k}, 1_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerNormalForm {
    pub zeta: Mat,
    pub n: u64,
    pub k: usize,
}

/// Nilpotent and invertible parts of `x -> x a` over F_p: bases of `ker a^m` and `im a^m`.
fn fitting_mod_p(a: &Mat) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let ap = a.mod_p();
    let stable = ap.pow(a.rows().max(1) as u64);
    let nil = if a.rows() == 0 { Vec::new() } else { stable.kernel().generators().to_rows() };
    let ran = Submodule::from_generators(&stable).generators().to_rows();
    (nil, ran)
}

fn rows_to_mat(ctx: RingCtx, cols: usize, rows: &[Vec<u64>]) -> Mat {
    Mat::from_vec(ctx, rows.len(), cols, rows.concat()).expect("rows have equal length")
}

fn order_in_gl(t: &Mat) -> u64 {
    let id = Mat::identity(t.ctx(), t.rows());
    let mut x = t.clone();
    let mut k = 1;
    while x != id {
        x = &x * t;
        k += 1;
    }
    k
}

/// Conjugate and power `a` until it becomes `diag(0, 1_k)`.
pub fn nilpotent_unit_normal_form(a: &Mat) -> Result<PowerNormalForm> {
    if !a.is_square() {
        return Err(Error::NotSquare);
    }
    let ctx = a.ctx();
    let m = a.rows();
    let p = ctx.p();
    let mu = ctx.mu();
    let (nil, ran) = fitting_mod_p(a);
    let k = ran.len();
    let mut basis = nil.clone();
    basis.extend(ran.iter().cloned());
    let e = rows_to_mat(ctx, m, &basis);
    let e_inv = e.try_inverse()?;
    let a1 = &(&e * a) * &e_inv;
    let t = a1.block(m - k, m, m - k, m).mod_p();
    let ord = if k == 0 { 1 } else { order_in_gl(&t) };
    let need = (m - k).max(1) as u64;
    let big_m = need.div_ceil(ord) * ord;
    let a2 = a1.pow(big_m);
    let s = m - k;
    let div_p = |x: &Mat| Mat::from_fn(ctx, x.rows(), x.cols(), |i, j| (x.get(i, j) / p) as i64);
    let alpha = div_p(&a2.block(0, s, 0, s));
    let beta = div_p(&a2.block(0, s, s, m));
    let gamma = div_p(&a2.block(s, m, 0, s));
    let delta = div_p(&(&a2.block(s, m, s, m) - &Mat::identity(ctx, k)));
    let u = solve_uu(&alpha, &beta, &gamma, &delta)?;
    let pu = u.scale(p);
    let z2 = upper_unipotent(ctx, s, k, &pu);
    let z2_inv = upper_unipotent(ctx, s, k, &pu.neg());
    let a3 = &(&z2 * &a2) * &z2_inv;
    let a4 = a3.pow(mu as u64);
    let gpp = div_p(&a4.block(s, m, 0, s));
    let d = a4.block(s, m, s, m);
    let v = &d.try_inverse()? * &gpp;
    let pv = v.scale(p);
    let z3 = lower_unipotent(ctx, s, k, &pv);
    let zeta = &(&z3 * &z2) * &e;
    let n_full = big_m * mu as u64 * p.pow(mu - 1);
    let target = Mat::zeros(ctx, s, s).direct_sum(&Mat::identity(ctx, k));
    let conj = &(&zeta * a) * &zeta.try_inverse()?;
    debug_assert_eq!(conj.pow(n_full), target);
    let mut x = conj.clone();
    let mut n = 1;
    while x != target {
        if n >= n_full {
            return Err(Error::NoSolution);
        }
        x = &x * &conj;
        n += 1;
    }
    Ok(PowerNormalForm { zeta, n, k })
}

fn upper_unipotent(ctx: RingCtx, s: usize, k: usize, x: &Mat) -> Mat {
    let mut m = Mat::identity(ctx, s + k);
    m.set_block(0, s, x);
    m
}

fn lower_unipotent(ctx: RingCtx, s: usize, k: usize, x: &Mat) -> Mat {
    let mut m = Mat::identity(ctx, s + k);
    m.set_block(s, 0, x);
    m
}

/// `u` making the upper-right block of `[1 pu; 0 1] a [1 -pu; 0 1]` vanish,
/// for `a = [p alpha, p beta; p gamma, 1 + p delta]`.
///
/// Fixed point of `u = (-beta + p alpha u + p^2 u gamma u)(1 + p delta)^{-1}`.
pub fn solve_uu(alpha: &Mat, beta: &Mat, gamma: &Mat, delta: &Mat) -> Result<Mat> {
    let (s, k) = (beta.rows(), beta.cols());
    if alpha.rows() != s || alpha.cols() != s || gamma.rows() != k || gamma.cols() != s || delta.rows() != k || delta.cols() != k {
        return Err(Error::BadSizes("blocks do not form a square matrix".into()));
    }
    let ctx = beta.ctx();
    let p = ctx.p();
    let dinv = (&Mat::identity(ctx, k) + &delta.scale(p)).try_inverse()?;
    let mut u = Mat::zeros(ctx, s, k);
    for _ in 0..=ctx.mu() {
        let inner = &(&beta.neg() + &(alpha * &u).scale(p)) + &(&(&u * gamma) * &u).scale(p * p);
        let next = &inner * &dinv;
        if next == u {
            break;
        }
        u = next;
    }
    Ok(u)
}

/// `u = sum s_j (cb)^j` with `2u - u cb u + (1 - cb)^{-1} = 0`.
pub fn solve_lemma2(b: &Mat, c: &Mat) -> Result<Mat> {
    if c.cols() != b.rows() || b.cols() != c.rows() {
        return Err(Error::DimMismatch("b is m x N and c is N x m".into()));
    }
    let ctx = b.ctx();
    let x = c * b;
    if !x.is_nilpotent()? || !(b * c).is_nilpotent()? {
        return Err(Error::NotNilpotent);
    }
    let n = x.rows();
    let mut powers = vec![Mat::identity(ctx, n)];
    while !powers.last().expect("nonempty").is_zero() {
        let next = powers.last().expect("nonempty") * &x;
        powers.push(next);
    }
    let deg = powers.len();
    let half = ctx.half();
    let mut s = vec![ctx.neg(half)];
    for j in 1..deg {
        let conv = (0..j).fold(0u64, |acc, i| ctx.add(acc, ctx.mul(s[i], s[j - 1 - i])));
        s.push(ctx.mul(half, ctx.sub(conv, 1)));
    }
    let mut u = Mat::zeros(ctx, n, n);
    for (coef, pw) in s.iter().zip(&powers) {
        u = &u + &pw.scale(*coef);
    }
    Ok(u)
}

/// Mode for [`pair_canonical_form`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    /// `B -> u^{-1} B v`, `C -> v^{-1} C u`.
    TwoSided,
    /// `B -> u^{-1} B v`, `C -> w^{-1} C u`.
    ThreeSided,
}

#[derive(Debug, Clone)]
pub struct PairCanonical {
    pub u: Mat,
    pub v: Mat,
    pub w: Mat,
    pub b: Mat,
    pub c: Mat,
    /// Size of the invertible corner.
    pub r: usize,
    /// Zero columns of `B` (rows of `C`) appended before reduction.
    pub pad: usize,
}

impl PairCanonical {
    /// `b_12` block: rows `0..m-r`, columns `r..`.
    pub fn b12(&self) -> Mat {
        let m = self.b.rows();
        self.b.block(0, m - self.r, self.r, self.b.cols())
    }

    /// `c_21` block: rows `r..`, columns `0..m-r`.
    pub fn c21(&self) -> Mat {
        let m = self.c.cols();
        self.c.block(self.r, self.c.rows(), 0, m - self.r)
    }
}

fn fp_complete(fp: RingCtx, n: usize, rows: &[Vec<u64>]) -> Mat {
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut rank = 0u64;
    let mut push = |r: Vec<u64>, out: &mut Vec<Vec<u64>>| {
        let mut trial = out.clone();
        trial.push(r.clone());
        let ord = Submodule::from_vectors(fp, n, &trial).order();
        if ord > fp.p().pow(rank as u32) {
            rank += 1;
            out.push(r);
        }
    };
    for r in rows {
        push(r.iter().map(|x| x % fp.p()).collect(), &mut out);
    }
    for j in 0..n {
        let mut e = vec![0u64; n];
        e[j] = 1;
        push(e, &mut out);
    }
    rows_to_mat(fp, n, &out)
}

fn part_a(b: &Mat, c: &Mat) -> Result<(Mat, Mat, usize)> {
    let ctx = b.ctx();
    let (m, n) = (b.rows(), b.cols());
    let (nil, ran) = fitting_mod_p(&(b * c));
    let (nil2, ran2) = fitting_mod_p(&(c * b));
    let r = ran.len();
    debug_assert_eq!(r, ran2.len());
    let mut er = nil;
    er.extend(ran);
    let e = rows_to_mat(ctx, m, &er);
    let mut fr = ran2;
    fr.extend(nil2);
    let f = rows_to_mat(ctx, n, &fr);
    let v = f.try_inverse()?;
    let e_inv = e.try_inverse()?;
    let b1 = &(&e * b) * &v;
    let c1 = &(&f * c) * &e_inv;
    let s = m - r;
    let b11 = b1.block(0, s, 0, r);
    let b21 = b1.block(s, m, 0, r);
    let t = &b11 * &b21.try_inverse()?;
    let u1 = upper_unipotent(ctx, s, r, &t);
    let c2 = &c1 * &u1;
    let c11 = c2.block(0, r, 0, s);
    let c12 = c2.block(0, r, s, m);
    let x = (&c12.try_inverse()? * &c11).neg();
    let u2 = lower_unipotent(ctx, s, r, &x);
    let u = &(&e_inv * &u1) * &u2;
    Ok((u, v, r))
}

/// Reduce `(B, C)` to canonical block shapes.
///
/// Layout: rows of `B` split `(m - r, r)`, columns `(r, N - r)`; `C` the transpose layout.
/// Part a gives `B = [0 b12; b21 b22]`, `C = [0 c12; c21 c22]` with `b21`, `c12` invertible.
/// Part b gives `B = [0 b12; 1 0]`, `C = [0 1; c21 0]` with `c21 b12`, `b12 c21` zero mod p.
pub fn pair_canonical_form(b: &Mat, c: &Mat, mode: PairMode) -> Result<PairCanonical> {
    let ctx = b.ctx();
    let m = b.rows();
    if c.cols() != m || c.rows() != b.cols() {
        return Err(Error::DimMismatch("B is m x N and C is N x m".into()));
    }
    let pad = if mode == PairMode::ThreeSided { m.saturating_sub(b.cols()) } else { 0 };
    let b = b.hstack(&Mat::zeros(ctx, m, pad));
    let c = c.vstack(&Mat::zeros(ctx, pad, m));
    let n = b.cols();
    let (mut u, mut v) = (Mat::identity(ctx, m), Mat::identity(ctx, n));
    let mut w = Mat::identity(ctx, n);
    let (mut bc, mut cc) = (b.clone(), c.clone());
    let fp = ctx.at_level(1)?;
    let mut r;
    loop {
        let (u1, v1, r1) = part_a(&bc, &cc)?;
        r = r1;
        bc = &(&u1.try_inverse()? * &bc) * &v1;
        cc = &(&v1.try_inverse()? * &cc) * &u1;
        u = &u * &u1;
        v = &v * &v1;
        w = &w * &v1;
        if mode == PairMode::TwoSided {
            break;
        }
        let s = m - r;
        let b21 = bc.block(s, m, 0, r);
        let vs = b21.try_inverse()?.direct_sum(&Mat::identity(ctx, n - r));
        bc = &bc * &vs;
        v = &v * &vs;
        let b22 = bc.block(s, m, r, n);
        let vk = upper_unipotent(ctx, r, n - r, &b22.neg());
        bc = &bc * &vk;
        v = &v * &vk;
        let c12 = cc.block(0, r, s, m);
        let ws = c12.try_inverse()?.direct_sum(&Mat::identity(ctx, n - r));
        cc = &ws * &cc;
        w = &w * &ws.try_inverse()?;
        let c22 = cc.block(r, n, s, m);
        let wk = lower_unipotent(ctx, r, n - r, &c22.neg());
        cc = &wk * &cc;
        w = &w * &lower_unipotent(ctx, r, n - r, &c22);
        let pm = bc.block(0, s, r, n).mod_p();
        let qm = cc.block(r, n, 0, s).mod_p();
        let apply = |uu: &Mat, bc: &mut Mat, v: &mut Mat| {
            let d = Mat::identity(ctx, r).direct_sum(&uu.lift_to(ctx));
            *bc = &*bc * &d;
            *v = &*v * &d;
        };
        if s == 0 || n == r {
            break;
        }
        let qp = &qm * &pm;
        if !qp.is_zero() {
            // a row x of Q with xP != 0 becomes a fixed vector of P U Q
            let i = (0..qp.rows()).find(|&i| qp.row(i).iter().any(|&x| x != 0)).expect("nonzero row");
            let y = qp.row(i);
            let mut z = vec![0u64; n - r];
            z[i] = 1;
            let ym = fp_complete(fp, n - r, &[y]);
            let zm = fp_complete(fp, n - r, &[z]);
            let uu = &ym.try_inverse()? * &zm;
            apply(&uu, &mut bc, &mut v);
            continue;
        }
        let pq = &pm * &qm;
        if !pq.is_zero() {
            // send the row space of P into the left kernel of Q
            let prow = Submodule::from_generators(&pm).generators().to_rows();
            let kq = qm.kernel().generators().to_rows();
            if kq.len() < prow.len() {
                return Err(Error::NoSolution);
            }
            let ym = fp_complete(fp, n - r, &prow);
            let zm = fp_complete(fp, n - r, &kq[..prow.len()]);
            let uu = &ym.try_inverse()? * &zm;
            apply(&uu, &mut bc, &mut v);
        }
        break;
    }
    debug_assert_eq!(&(&u.try_inverse()? * &b) * &v, bc);
    debug_assert_eq!(&(&w.try_inverse()? * &c) * &u, cc);
    Ok(PairCanonical { u, v, w, b: bc, c: cc, r, pad })
}

/// Check the part-a side conditions on a reduced pair.
pub fn part_a_conditions(pc: &PairCanonical) -> bool {
    let (m, n, r) = (pc.b.rows(), pc.b.cols(), pc.r);
    let s = m - r;
    let b = &pc.b;
    let c = &pc.c;
    let b12 = b.block(0, s, r, n);
    let c21 = c.block(r, n, 0, s);
    b.block(0, s, 0, r).is_zero()
        && c.block(0, r, 0, s).is_zero()
        && b.block(s, m, 0, r).is_invertible()
        && c.block(0, r, s, m).is_invertible()
        && (&b12 * &c21).is_nilpotent().unwrap_or(false)
        && (&c21 * &b12).is_nilpotent().unwrap_or(false)
        && b.block(s, m, r, n).mod_p().is_zero()
        && c.block(r, n, s, m).mod_p().is_zero()
}

/// Check the part-b shape and the mod-p annihilation conditions.
pub fn part_b_conditions(pc: &PairCanonical) -> bool {
    let ctx = pc.b.ctx();
    let (m, n, r) = (pc.b.rows(), pc.b.cols(), pc.r);
    let s = m - r;
    let b12 = pc.b12();
    let c21 = pc.c21();
    let mut eb = Mat::zeros(ctx, m, n);
    eb.set_block(0, r, &b12);
    eb.set_block(s, 0, &Mat::identity(ctx, r));
    let mut ec = Mat::zeros(ctx, n, m);
    ec.set_block(0, s, &Mat::identity(ctx, r));
    ec.set_block(r, 0, &c21);
    pc.b == eb && pc.c == ec && (&c21 * &b12).mod_p().is_zero() && (&b12 * &c21).mod_p().is_zero()
}

/// `[g^{-1}] ∘ [g]` for `g = [1 b; c 1]`, identified through Π as X[ker b, ker c^t].
pub fn gg1_idempotent(b: &Mat, c: &Mat) -> Result<XIdempotent> {
    let ctx = b.ctx();
    let m = b.rows();
    let g = DoubleCoset::new(m, m, square_pair(b, c)?)?;
    let e = g.involution().compose(&g)?;
    let one_bc = (&Mat::identity(ctx, m) - &(b * c)).try_inverse()?;
    let one_cb = (&Mat::identity(ctx, c.rows()) - &(c * b)).try_inverse()?;
    assert_eq!(c * &one_bc, &one_cb * c, "c(1-bc)^-1 = (1-cb)^-1 c");
    let x = XIdempotent::from_pair(b, c);
    // Π is relied on to separate idempotents here
    if pi_functor(&e) != x.pi() {
        return Err(Error::NotIdempotent);
    }
    Ok(x)
}

/// `[1 b; c 1]` with `b` of size m x N.
pub fn square_pair(b: &Mat, c: &Mat) -> Result<Mat> {
    let ctx = b.ctx();
    if c.rows() != b.cols() || c.cols() != b.rows() {
        return Err(Error::DimMismatch("b is m x N and c is N x m".into()));
    }
    Mat::block_compose(&[
        vec![Mat::identity(ctx, b.rows()), b.clone()],
        vec![c.clone(), Mat::identity(ctx, b.cols())],
    ])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducedElement {
    Zero,
    Element {
        a: Mat,
        x: XIdempotent,
        /// Normalized blocks: the input is `a0 · [1 b; c 1]`.
        b: Mat,
        c: Mat,
        /// Solution of the lemma-2 equation for `(b, c)`.
        u: Mat,
    },
}

impl ReducedElement {
    /// `a · X(b, c)`.
    pub fn rebuild(&self) -> Option<DoubleCoset> {
        match self {
            ReducedElement::Zero => None,
            ReducedElement::Element { a, b, c, .. } => {
                let x = x_matrix(b, c).ok()?;
                let big_a = a.pad_identity(x.rows());
                DoubleCoset::new(a.rows(), a.rows(), &big_a * &x).ok()
            }
        }
    }
}

/// Write `g` as `a · X[ker b, ker c^t]`, or report the zero class.
pub fn decompose_reduced(g: &DoubleCoset) -> Result<ReducedElement> {
    if g.alpha() != g.beta() {
        return Err(Error::ObjectMismatch);
    }
    let ctx = g.ctx();
    let m = g.alpha();
    let (a0, b0, c0, d0) = g.blocks();
    let (Ok(a0i), Ok(d0i)) = (a0.try_inverse(), d0.try_inverse()) else {
        return Ok(ReducedElement::Zero);
    };
    let b = &(&a0i * &b0) * &d0i;
    let c = c0;
    if !(&b * &c).is_nilpotent()? {
        return Ok(ReducedElement::Zero);
    }
    let u = solve_lemma2(&b, &c)?;
    let one = Mat::identity(ctx, m);
    let a = &(&a0 * &(&one - &(&b * &c))) * &(&one - &(&(&b * &u) * &c));
    let x = XIdempotent::from_pair(&b, &c);
    Ok(ReducedElement::Element { a, x, b, c, u })
}

/// `(g ∘ E, a · X(b, c))` with `E = [g_u^{-1}] ∘ [g_u]`, `g_u = [1 bu; c 1]`;
/// the two sides are equivalent double cosets.
pub fn decomposition_certificate(g: &DoubleCoset, r: &ReducedElement) -> Result<Option<(DoubleCoset, DoubleCoset)>> {
    let ReducedElement::Element { b, c, u, .. } = r else {
        return Ok(None);
    };
    let m = g.alpha();
    let gu = DoubleCoset::new(m, m, square_pair(&(b * u), c)?)?;
    let e = gu.involution().compose(&gu)?;
    let lhs = g.compose(&e)?;
    Ok(Some((lhs, r.rebuild().expect("element variant"))))
}

#[derive(Debug, Clone)]
pub struct IdempotentCanonical {
    pub x: XIdempotent,
    /// Conjugating element: `q X[L,M] q^{-1} = X([0 beta; 1 0], [0 1; gamma 0])`.
    pub q: Mat,
    pub beta: Mat,
    pub gamma: Mat,
    pub form: PairCanonical,
}

/// Canonical conjugate of an idempotent X[L, M].
pub fn idempotent_canonical(x: &DoubleCoset, cap: u128) -> Result<IdempotentCanonical> {
    let pi = pi_functor(x);
    if !pi.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let id = XIdempotent::from_pi(&pi).ok_or(Error::NotIdempotent)?;
    let sq = x.compose(x)?;
    match sq.equivalent(x, cap) {
        Ok(false) => return Err(Error::NotIdempotent),
        Ok(true) | Err(Error::SearchSpaceTooLarge { .. }) => {}
        Err(e) => return Err(e),
    }
    let (b, c) = id.presentation();
    let form = pair_canonical_form(&b, &c, PairMode::ThreeSided)?;
    let q = form.u.try_inverse()?;
    Ok(IdempotentCanonical { x: id, q, beta: form.b12(), gamma: form.c21(), form })
}

/// From `[1 a; b 1]` with `ab = 0`, build the `p^mu`-fold
/// matrix `q` and conjugate it to X-form. Returns `(q, conjugated)`.
pub fn power_trick(a: &Mat, b: &Mat) -> Result<(Mat, Mat)> {
    let ctx = a.ctx();
    let m = a.rows();
    let k = a.cols();
    if b.rows() != k || b.cols() != m {
        return Err(Error::DimMismatch("a is m x k, b is k x m".into()));
    }
    if !(a * b).is_zero() {
        return Err(Error::BadSizes("ab must vanish".into()));
    }
    let copies = ctx.modulus() as usize;
    if copies > 81 {
        return Err(Error::CapExceeded { cap: 81 });
    }
    let n = m + copies * k;
    let mut q = Mat::identity(ctx, n);
    for t in 0..copies {
        q.set_block(0, m + t * k, a);
        q.set_block(m + t * k, 0, b);
    }
    let mut uu = Mat::identity(ctx, copies * k);
    for t in 1..copies {
        uu.set_block(t * k, (t - 1) * k, &Mat::scalar(ctx, k, -1));
    }
    let big = Mat::identity(ctx, m).direct_sum(&uu);
    let conj = &(&big * &q) * &big.try_inverse()?;
    Ok((q, conj))
}
