//! The stabilizer tiers Ĝ[L;M] ⊇ G°[L;M] ⊇ G•[L;M] at finite size, finite closures,
//! and exact checks of the matrix identities used in the generation arguments.

use crate::error::{Error, Result};
use crate::idempotent::x_matrix;
use crate::linalg::{general_linear, Mat, Side};
use crate::ring::RingCtx;
use crate::submodule::Submodule;
use rand::Rng;
use rayon::prelude::*;
use std::collections::HashMap;
use std::hash::Hash;

/// `L = ker b`, `M = ker c^t` inside `(Z/p^mu)^m`, and the truncation size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerSpec {
    pub l: Submodule,
    pub m: Submodule,
    pub b: Mat,
    pub c: Mat,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Hat,
    Circ,
    Bullet,
}

/// Block witnesses: `a = 1 - bS = 1 - Tc` (or `1 - buc`), upper right `bv`, lower left `wc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub s: Option<Mat>,
    pub t: Option<Mat>,
    pub u: Option<Mat>,
    pub v: Mat,
    pub w: Mat,
}

impl StabilizerSpec {
    pub fn new(l: Submodule, m: Submodule, n: usize) -> Result<StabilizerSpec> {
        if l.ambient_rank() != m.ambient_rank() {
            return Err(Error::RankMismatch);
        }
        if n < l.ambient_rank() {
            return Err(Error::SizeMismatch(format!("truncation {n} below rank {}", l.ambient_rank())));
        }
        let b = l.as_kernel();
        let c = m.as_kernel().transpose();
        Ok(StabilizerSpec { l, m, b, c, n })
    }

    pub fn rank(&self) -> usize {
        self.l.ambient_rank()
    }

    pub fn ctx(&self) -> RingCtx {
        self.b.ctx()
    }

    /// Transport by `a` in GL(m): `(L a, M a^{t-1})`.
    pub fn act(&self, a: &Mat) -> Result<StabilizerSpec> {
        let at = a.try_inverse()?.transpose();
        StabilizerSpec::new(self.l.act(a)?, self.m.act(&at)?, self.n)
    }
}

fn padded_gens(s: &Submodule, n: usize) -> Vec<Vec<u64>> {
    s.generators()
        .to_rows()
        .into_iter()
        .map(|mut r| {
            r.resize(n, 0);
            r
        })
        .collect()
}

fn check_shape(g: &Mat, spec: &StabilizerSpec) -> Result<()> {
    if g.rows() != spec.n || g.cols() != spec.n {
        return Err(Error::SizeMismatch(format!("matrix is {}x{}, truncation is {}", g.rows(), g.cols(), spec.n)));
    }
    if g.ctx() != spec.ctx() {
        return Err(Error::MixedContext);
    }
    Ok(())
}

/// `v g` and `w g^{t-1}` for the generators of L and M.
fn images(g: &Mat, spec: &StabilizerSpec) -> Result<(Vec<(Vec<u64>, Vec<u64>)>, Vec<(Vec<u64>, Vec<u64>)>)> {
    let ctx = g.ctx();
    let git = g.try_inverse()?.transpose();
    let act = |v: &Vec<u64>, h: &Mat| (&Mat::row_vector(ctx, v) * h).row(0);
    let lp = padded_gens(&spec.l, spec.n).into_iter().map(|v| (act(&v, g), v)).collect();
    let mp = padded_gens(&spec.m, spec.n).into_iter().map(|w| (act(&w, &git), w)).collect();
    Ok((lp, mp))
}

fn in_padded(s: &Submodule, v: &[u64]) -> Result<bool> {
    let m = s.ambient_rank();
    Ok(v[m..].iter().all(|&x| x == 0) && s.contains(&v[..m])?)
}

/// `g` sends L into L and M into M.
pub fn in_hat(g: &Mat, spec: &StabilizerSpec) -> Result<bool> {
    check_shape(g, spec)?;
    let (lp, mp) = images(g, spec)?;
    for (img, _) in &lp {
        if !in_padded(&spec.l, img)? {
            return Ok(false);
        }
    }
    for (img, _) in &mp {
        if !in_padded(&spec.m, img)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g` fixes L and M pointwise.
pub fn circ_oracle(g: &Mat, spec: &StabilizerSpec) -> Result<bool> {
    check_shape(g, spec)?;
    let (lp, mp) = images(g, spec)?;
    Ok(lp.iter().chain(&mp).all(|(img, v)| img == v))
}

/// `x` with `b x = rhs`, allowing `b` with no columns.
fn solve_right(b: &Mat, rhs: &Mat) -> Option<Mat> {
    if b.cols() == 0 {
        return rhs.is_zero().then(|| Mat::zeros(b.ctx(), 0, rhs.cols()));
    }
    if rhs.cols() == 0 {
        return Some(Mat::zeros(b.ctx(), b.cols(), 0));
    }
    b.solve_linear(rhs, Side::Right).ok()
}

/// `x` with `x c = rhs`, allowing `c` with no rows.
fn solve_left(c: &Mat, rhs: &Mat) -> Option<Mat> {
    if c.rows() == 0 {
        return rhs.is_zero().then(|| Mat::zeros(c.ctx(), rhs.rows(), 0));
    }
    if rhs.rows() == 0 {
        return Some(Mat::zeros(c.ctx(), 0, c.rows()));
    }
    c.solve_linear(rhs, Side::Left).ok()
}

/// `u` with `b u c = rhs`.
pub fn solve_two_sided(b: &Mat, c: &Mat, rhs: &Mat) -> Option<Mat> {
    let ctx = b.ctx();
    let (m, k1, k2) = (b.rows(), b.cols(), c.rows());
    if k1 == 0 || k2 == 0 {
        return rhs.is_zero().then(|| Mat::zeros(ctx, k1, k2));
    }
    let mut sys = Mat::zeros(ctx, k1 * k2, m * m);
    for x in 0..k1 {
        for y in 0..k2 {
            for i in 0..m {
                for j in 0..m {
                    sys.set(x * k2 + y, i * m + j, ctx.mul(b.get(i, x), c.get(y, j)));
                }
            }
        }
    }
    let sol = sys.solve_row(rhs.data())?;
    Mat::from_vec(ctx, k1, k2, sol).ok()
}

/// Block witnesses for the circ tier, if they exist.
pub fn circ_witness(g: &Mat, spec: &StabilizerSpec) -> Result<Option<Witness>> {
    check_shape(g, spec)?;
    let m = spec.rank();
    let n = spec.n;
    let ctx = g.ctx();
    let one_minus_a = &Mat::identity(ctx, m) - &g.block(0, m, 0, m);
    let (Some(v), Some(w)) = (solve_right(&spec.b, &g.block(0, m, m, n)), solve_left(&spec.c, &g.block(m, n, 0, m)))
    else {
        return Ok(None);
    };
    let (Some(s), Some(t)) = (solve_right(&spec.b, &one_minus_a), solve_left(&spec.c, &one_minus_a)) else {
        return Ok(None);
    };
    Ok(Some(Witness { s: Some(s), t: Some(t), u: None, v, w }))
}

/// Block witnesses for the bullet tier, if they exist.
pub fn bullet_witness(g: &Mat, spec: &StabilizerSpec) -> Result<Option<Witness>> {
    let Some(mut wit) = circ_witness(g, spec)? else {
        return Ok(None);
    };
    let m = spec.rank();
    let one_minus_a = &Mat::identity(g.ctx(), m) - &g.block(0, m, 0, m);
    match solve_two_sided(&spec.b, &spec.c, &one_minus_a) {
        Some(u) => {
            wit.u = Some(u);
            Ok(Some(wit))
        }
        None => Ok(None),
    }
}

/// Tier membership with a witness for the circ and bullet tiers.
pub fn membership(g: &Mat, spec: &StabilizerSpec, tier: Tier) -> Result<(bool, Option<Witness>)> {
    check_shape(g, spec)?;
    if !g.is_invertible() {
        return Err(Error::NotInvertible);
    }
    match tier {
        Tier::Hat => Ok((in_hat(g, spec)?, None)),
        Tier::Circ => {
            let w = circ_witness(g, spec)?;
            debug_assert_eq!(w.is_some(), circ_oracle(g, spec)?);
            Ok((w.is_some(), w))
        }
        Tier::Bullet => {
            let w = bullet_witness(g, spec)?;
            Ok((w.is_some(), w))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Group,
    SemigroupWithInvolution,
}

/// Deduplicated elements in BFS insertion order.
#[derive(Debug, Clone)]
pub struct FiniteClosure<T> {
    pub elements: Vec<T>,
    pub generators: Vec<T>,
    pub complete: bool,
    pub cap: usize,
    index: HashMap<T, usize>,
}

impl<T: Clone + Eq + Hash> FiniteClosure<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }

    pub fn position(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }
}

/// BFS closure under `mul` and, if given, an anti-involution `star`. Words in the
/// generators and their stars are enumerated by right multiplication.
pub fn closure_with<T, M, S>(gens: &[T], mul: M, star: Option<S>, cap: usize) -> FiniteClosure<T>
where
    T: Clone + Eq + Hash + Send + Sync,
    M: Fn(&T, &T) -> T + Sync + Send,
    S: Fn(&T) -> T,
{
    let mut out = FiniteClosure { elements: Vec::new(), generators: gens.to_vec(), complete: true, cap, index: HashMap::new() };
    let insert = |x: T, out: &mut FiniteClosure<T>| {
        if !out.index.contains_key(&x) {
            out.index.insert(x.clone(), out.elements.len());
            out.elements.push(x);
        }
    };
    let mut letters: Vec<T> = gens.to_vec();
    if let Some(s) = &star {
        letters.extend(gens.iter().map(s));
    }
    for g in &letters {
        insert(g.clone(), &mut out);
    }
    let mut done = 0;
    while done < out.elements.len() {
        if out.elements.len() > cap {
            out.complete = false;
            break;
        }
        let end = out.elements.len().min(done + 4096);
        let fresh: Vec<T> = out.elements[done..end]
            .par_iter()
            .flat_map_iter(|x| letters.iter().map(|g| mul(x, g)).collect::<Vec<_>>())
            .collect();
        done = end;
        for x in fresh {
            insert(x, &mut out);
        }
    }
    if out.elements.len() > cap {
        out.complete = false;
    }
    out
}

/// Closure of matrices: products for [`Law::Group`], products and transposes otherwise.
pub fn closure(gens: &[Mat], law: Law, cap: usize) -> Result<FiniteClosure<Mat>> {
    if let Some(g0) = gens.first() {
        for g in gens {
            if g.rows() != g0.rows() || g.cols() != g0.cols() || !g.is_square() {
                return Err(Error::SizeMismatch("generators differ in size".into()));
            }
            if g.ctx() != g0.ctx() {
                return Err(Error::MixedContext);
            }
            if law == Law::Group && !g.is_invertible() {
                return Err(Error::NotInvertible);
            }
        }
    }
    let mul = |x: &Mat, y: &Mat| x * y;
    let c = match law {
        Law::Group => closure_with(gens, mul, None::<fn(&Mat) -> Mat>, cap),
        Law::SemigroupWithInvolution => closure_with(gens, mul, Some(|x: &Mat| x.transpose()), cap),
    };
    if !c.complete {
        return Err(Error::CapExceeded { cap });
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation<T> {
    /// `x x* x != x`.
    Regularity(T),
    /// Idempotents `e`, `f` with `ef != fe`.
    Commutation(T, T),
}

/// First violation of the inverse-semigroup axioms on `elements`, if any.
pub fn axiom_violation<T, M, S, E>(elements: &[T], mul: M, star: S, eq: E) -> Option<AxiomViolation<T>>
where
    T: Clone,
    M: Fn(&T, &T) -> T,
    S: Fn(&T) -> T,
    E: Fn(&T, &T) -> bool,
{
    for x in elements {
        if !eq(&mul(&mul(x, &star(x)), x), x) {
            return Some(AxiomViolation::Regularity(x.clone()));
        }
    }
    let idem: Vec<&T> = elements.iter().filter(|x| eq(&mul(x, x), x)).collect();
    for (i, e) in idem.iter().enumerate() {
        for f in &idem[i + 1..] {
            if !eq(&mul(e, f), &mul(f, e)) {
                return Some(AxiomViolation::Commutation((*e).clone(), (*f).clone()));
            }
        }
    }
    None
}

/// Inverse-semigroup check on a complete closure.
pub fn is_inverse_semigroup<T, M, S>(s: &FiniteClosure<T>, mul: M, star: S) -> Result<Option<AxiomViolation<T>>>
where
    T: Clone + Eq + Hash,
    M: Fn(&T, &T) -> T,
    S: Fn(&T) -> T,
{
    if !s.complete {
        return Err(Error::IncompleteClosure);
    }
    Ok(axiom_violation(&s.elements, mul, star, |a, b| a == b))
}

/// `A°/A•` data for a stabilizer spec.
#[derive(Debug, Clone)]
pub struct QuotientData {
    /// `a = 1 - bS = 1 - Tc` in GL(m).
    pub circ: Vec<Mat>,
    /// `a = 1 - buc` in GL(m).
    pub bullet: Vec<Mat>,
    /// One representative per left coset `a A•`.
    pub reps: Vec<Mat>,
    pub order: usize,
}

/// Enumerate `A°` and `A•` inside GL(m) and form the quotient.
pub fn quotient_circ_bullet(spec: &StabilizerSpec, cap: usize) -> Result<QuotientData> {
    let ctx = spec.ctx();
    let m = spec.rank();
    let one = Mat::identity(ctx, m);
    let gl = general_linear(ctx, m, cap)?;
    let (b, c) = (&spec.b, &spec.c);
    let circ: Vec<Mat> = gl
        .par_iter()
        .filter(|a| {
            let r = &one - a;
            solve_right(b, &r).is_some() && solve_left(c, &r).is_some()
        })
        .cloned()
        .collect();
    let bullet: Vec<Mat> = circ.par_iter().filter(|a| solve_two_sided(b, c, &(&one - a)).is_some()).cloned().collect();
    let bset: std::collections::HashSet<&Mat> = bullet.iter().collect();
    let cset: std::collections::HashSet<&Mat> = circ.iter().collect();
    // group axioms and normality, checked exhaustively
    for x in &bullet {
        let xi = x.try_inverse()?;
        if !bset.contains(&xi) {
            return Err(Error::NoSolution);
        }
        for y in &bullet {
            if !bset.contains(&(x * y)) {
                return Err(Error::NoSolution);
            }
        }
    }
    for a in &circ {
        let ai = a.try_inverse()?;
        if !cset.contains(&ai) {
            return Err(Error::NoSolution);
        }
        for x in &bullet {
            if !bset.contains(&(&(a * x) * &ai)) {
                return Err(Error::NoSolution);
            }
        }
    }
    let mut covered: std::collections::HashSet<Mat> = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for a in &circ {
        if covered.contains(a) {
            continue;
        }
        for x in &bullet {
            covered.insert(a * x);
        }
        reps.push(a.clone());
    }
    let order = reps.len();
    debug_assert_eq!(order * bullet.len(), circ.len());
    Ok(QuotientData { circ, bullet, reps, order })
}

/// `a (1 - buc) a^{-1} = 1 - b (1 - Sb) u (1 - cT) c` with `a = 1 - bS`, `a^{-1} = 1 - Tc`.
pub fn normality_identity(spec: &StabilizerSpec, a: &Mat, u: &Mat) -> Result<bool> {
    let ctx = spec.ctx();
    let m = spec.rank();
    let one = Mat::identity(ctx, m);
    let (b, c) = (&spec.b, &spec.c);
    let ai = a.try_inverse()?;
    let s = solve_right(b, &(&one - a)).ok_or(Error::NoSolution)?;
    let t = solve_left(c, &(&one - &ai)).ok_or(Error::NoSolution)?;
    let x = &one - &(&(b * u) * c);
    let lhs = &(a * &x) * &ai;
    let k1 = Mat::identity(ctx, b.cols());
    let k2 = Mat::identity(ctx, c.rows());
    let rhs = &one - &(&(&(b * &(&k1 - &(&s * b))) * u) * &(&(&k2 - &(c * &t)) * c));
    Ok(lhs == rhs)
}

/// Pass/fail tally for one identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

fn rand_mat<R: Rng>(ctx: RingCtx, r: usize, c: usize, rng: &mut R) -> Mat {
    Mat::from_fn(ctx, r, c, |_, _| rng.gen_range(0..ctx.modulus()) as i64)
}

fn rand_unit_mat<R: Rng>(ctx: RingCtx, n: usize, rng: &mut R) -> Mat {
    loop {
        let x = rand_mat(ctx, n, n, rng);
        if x.is_invertible() {
            return x;
        }
    }
}

/// `r = r1 + r2 + r3` with every `r_i` invertible (p odd).
pub fn sum_of_three_invertibles(r: &Mat) -> Result<(Mat, Mat, Mat)> {
    let (x, y) = sum_of_two_invertibles(r)?;
    Ok((x, y.scale(2), y.neg()))
}

/// `r = x + y` with `x`, `y` invertible, through the Smith form.
pub fn sum_of_two_invertibles(r: &Mat) -> Result<(Mat, Mat)> {
    if !r.is_square() {
        return Err(Error::NotSquare);
    }
    let ctx = r.ctx();
    let n = r.rows();
    let sd = r.smith_diagonal();
    let mut d1 = Mat::zeros(ctx, n, n);
    for i in 0..n {
        let d = sd.d.get(i, i);
        let e = if ctx.is_unit(ctx.sub(d, 1)) { 1 } else { ctx.neg(1) };
        d1.set(i, i, e);
    }
    let d2 = &sd.d - &d1;
    let x = &(&sd.u * &d1) * &sd.v;
    let y = &(&sd.u * &d2) * &sd.v;
    debug_assert_eq!(&x + &y, *r);
    Ok((x, y))
}

/// `Y[beta]` with blocks `(m - alpha, alpha, alpha, t)`.
pub fn y_matrix(ctx: RingCtx, m: usize, alpha: usize, beta: &Mat) -> Mat {
    let t = beta.cols();
    let n = m + alpha + t;
    let mut y = Mat::identity(ctx, n);
    y.set_block(m - alpha, m, &Mat::identity(ctx, alpha));
    y.set_block(0, m + alpha, beta);
    y
}

/// `Z[gamma]` with blocks `(m - alpha, alpha, alpha, t)`.
pub fn z_matrix(ctx: RingCtx, m: usize, alpha: usize, gamma: &Mat) -> Mat {
    let t = gamma.rows();
    let n = m + alpha + t;
    let mut z = Mat::identity(ctx, n);
    z.set_block(m, m - alpha, &Mat::identity(ctx, alpha));
    z.set_block(m + alpha, 0, gamma);
    z
}

/// Products of X matrices, the Y/Z laws, the four-factor decompositions and
/// the three-invertibles decomposition, on `instances` random inputs each.
pub fn proof_identity_suite<R: Rng>(ctx: RingCtx, m: usize, instances: usize, rng: &mut R) -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    let mut tally = |name: &'static str, f: &mut dyn FnMut() -> bool| {
        let mut rep = IdentityReport { name, passed: 0, failed: 0 };
        for _ in 0..instances {
            if f() {
                rep.passed += 1;
            } else {
                rep.failed += 1;
            }
        }
        reports.push(rep);
    };
    let id = |k| Mat::identity(ctx, k);
    let n = m;

    tally("xx-product", &mut || {
        let (b, b2) = (rand_mat(ctx, m, n, rng), rand_mat(ctx, m, n, rng));
        let (c, c2) = (rand_mat(ctx, n, m, rng), rand_mat(ctx, n, m, rng));
        let v = rand_unit_mat(ctx, n, rng);
        let w = rand_unit_mat(ctx, n, rng);
        let lhs = &x_matrix(&(&b * &v), &(&w * &c)).unwrap() * &x_matrix(&(&b2 * &v), &(&w * &c2)).unwrap();
        let mut h = id(m + 2 * n);
        h.set_block(m + n, m, &(&(&(&w * &c) * &b2) * &v));
        let rhs = &h * &x_matrix(&(&(&b + &b2) * &v), &(&w * &(&c + &c2))).unwrap();
        lhs == rhs
    });
    tally("xx-cancel", &mut || {
        let b = rand_mat(ctx, m, n, rng);
        let c = rand_mat(ctx, n, m, rng);
        let lhs = &x_matrix(&b, &c).unwrap() * &x_matrix(&b.neg(), &c.neg()).unwrap();
        let mut rhs = id(m + 2 * n);
        rhs.set_block(m + n, m, &(&c * &b).neg());
        lhs == rhs
    });
    tally("x-square-conjugation", &mut || {
        let b = rand_mat(ctx, m, n, rng);
        let c = rand_mat(ctx, n, m, rng);
        let half = ctx.half();
        let left = id(m).direct_sum(&Mat::scalar(ctx, n, half as i64)).direct_sum(&Mat::scalar(ctx, n, 2));
        let right = id(m).direct_sum(&Mat::scalar(ctx, n, 2)).direct_sum(&Mat::scalar(ctx, n, half as i64));
        let lhs = &(&left * &x_matrix(&b, &c).unwrap()) * &right;
        lhs == x_matrix(&b.scale(2), &c.scale(2)).unwrap()
    });
    let alpha = if m > 1 { 1 } else { 0 };
    let t = m - alpha;
    tally("y-law", &mut || {
        let beta = rand_mat(ctx, m - alpha, t, rng);
        let r: Vec<Mat> = (0..3).map(|_| rand_mat(ctx, t, t, rng)).collect();
        let y = |x: &Mat| y_matrix(ctx, m, alpha, &(&beta * x));
        let lhs = &(&y(&r[0]) * &y(&r[1]).try_inverse().unwrap()) * &y(&r[2]);
        lhs == y(&(&(&r[0] - &r[1]) + &r[2]))
    });
    tally("z-law", &mut || {
        let gamma = rand_mat(ctx, t, m - alpha, rng);
        let q: Vec<Mat> = (0..3).map(|_| rand_mat(ctx, t, t, rng)).collect();
        let z = |x: &Mat| z_matrix(ctx, m, alpha, &(x * &gamma));
        let lhs = &(&z(&q[0]) * &z(&q[1]).try_inverse().unwrap()) * &z(&q[2]);
        lhs == z(&(&(&q[0] - &q[1]) + &q[2]))
    });
    tally("y-conjugation", &mut || {
        let beta = rand_mat(ctx, m - alpha, t, rng);
        let r = rand_unit_mat(ctx, t, rng);
        let d = id(m + alpha).direct_sum(&r);
        let lhs = &(&d.try_inverse().unwrap() * &y_matrix(ctx, m, alpha, &beta)) * &d;
        lhs == y_matrix(ctx, m, alpha, &(&beta * &r))
    });
    tally("four-factor", &mut || {
        // 1 - buc invertible: take c = 0 mod p half the time, otherwise retry
        let (b, c, u) = loop {
            let b = rand_mat(ctx, m, n, rng);
            let c = rand_mat(ctx, n, m, rng);
            let u = rand_mat(ctx, n, n, rng);
            if (&id(m) - &(&(&b * &u) * &c)).is_invertible() {
                break (b, c, u);
            }
        };
        let v = rand_mat(ctx, n, n, rng);
        let w = rand_mat(ctx, n, n, rng);
        let a = &id(m) - &(&(&b * &u) * &c);
        let ai = a.try_inverse().unwrap();
        let bv = &b * &v;
        let wc = &w * &c;
        let schur = rand_unit_mat(ctx, n, rng);
        let z = &schur + &(&(&wc * &ai) * &bv);
        let g = Mat::block_compose(&[vec![a.clone(), bv.clone()], vec![wc.clone(), z.clone()]]).unwrap();
        let f1 = Mat::block_compose(&[vec![id(m), Mat::zeros(ctx, m, n)], vec![&wc * &ai, id(n)]]).unwrap();
        let f2 = a.direct_sum(&id(n));
        let f3 = id(m).direct_sum(&(&z - &(&(&wc * &ai) * &bv)));
        let f4 = Mat::block_compose(&[vec![id(m), &ai * &bv], vec![Mat::zeros(ctx, n, m), id(n)]]).unwrap();
        let prod = &(&(&f1 * &f2) * &f3) * &f4;
        prod == g && f3.is_invertible()
    });
    tally("three-invertibles", &mut || {
        let r = rand_mat(ctx, m, m, rng);
        let (r1, r2, r3) = sum_of_three_invertibles(&r).unwrap();
        &(&r1 + &r2) + &r3 == r && r1.is_invertible() && r2.is_invertible() && r3.is_invertible()
    });
    reports
}

/// Closure of `diag(1, GL(2, Z_3))` and `X(1, 1)` inside GL(3, Z_3); returns its order.
pub fn gl3_generation_check() -> Result<usize> {
    let z3 = RingCtx::new(3, 1)?;
    let mut gens: Vec<Mat> = general_linear(z3, 2, 1 << 10)?.iter().map(|g| Mat::identity(z3, 1).direct_sum(g)).collect();
    let one = Mat::identity(z3, 1);
    gens.push(x_matrix(&one, &one)?);
    Ok(closure(&gens, Law::Group, 20_000)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z9() -> RingCtx {
        RingCtx::new(3, 2).unwrap()
    }

    fn scalar_spec(ctx: RingCtx, x: i64, n: usize) -> StabilizerSpec {
        let b = Mat::from_rows(ctx, &[vec![x]]).unwrap();
        StabilizerSpec::new(b.kernel(), b.kernel(), n).unwrap()
    }

    #[test]
    fn identity_is_in_every_tier() {
        let spec = scalar_spec(z9(), 3, 2);
        for tier in [Tier::Hat, Tier::Circ, Tier::Bullet] {
            let (ok, w) = membership(&Mat::identity(z9(), 2), &spec, tier).unwrap();
            assert!(ok);
            if let Some(w) = w {
                assert!(w.s.unwrap().is_zero() && w.t.unwrap().is_zero());
            }
        }
    }

    #[test]
    fn x_is_a_bullet_member() {
        let ctx = z9();
        let spec = scalar_spec(ctx, 3, 3);
        let x = x_matrix(&spec.b, &spec.c).unwrap();
        let (ok, w) = membership(&x, &spec, Tier::Bullet).unwrap();
        assert!(ok);
        assert!(w.unwrap().u.unwrap().is_zero());
    }

    #[test]
    fn quotient_examples() {
        let ctx = z9();
        let q = quotient_circ_bullet(&scalar_spec(ctx, 3, 1), 1 << 12).unwrap();
        assert_eq!((q.circ.len(), q.bullet.len(), q.order), (3, 1, 3));
        let zero = StabilizerSpec::new(Submodule::zero(ctx, 1), Submodule::zero(ctx, 1), 1).unwrap();
        let q = quotient_circ_bullet(&zero, 1 << 12).unwrap();
        assert_eq!((q.circ.len(), q.order), (6, 1));
        let full = StabilizerSpec::new(Submodule::full(ctx, 1), Submodule::full(ctx, 1), 1).unwrap();
        let q = quotient_circ_bullet(&full, 1 << 12).unwrap();
        assert_eq!((q.circ.len(), q.bullet.len(), q.order), (1, 1, 1));
    }

    #[test]
    fn closure_examples() {
        let z3 = RingCtx::new(3, 1).unwrap();
        assert_eq!(closure(&[Mat::identity(z3, 2)], Law::Group, 10).unwrap().len(), 1);
        let m = Mat::identity(z3, 1).direct_sum(&Mat::scalar(z3, 1, 2));
        assert_eq!(closure(&[m], Law::Group, 10).unwrap().len(), 2);
    }

    #[test]
    fn suite_passes_small() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for r in proof_identity_suite(z9(), 2, 10, &mut rng) {
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn zero_is_a_sum_of_three_units() {
        let z3 = RingCtx::new(3, 1).unwrap();
        let (a, b, c) = sum_of_three_invertibles(&Mat::zeros(z3, 2, 2)).unwrap();
        assert!(a.is_invertible() && b.is_invertible() && c.is_invertible());
        assert!((&(&a + &b) + &c).is_zero());
    }

    use rand::SeedableRng;
}
