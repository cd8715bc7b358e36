//! Dense matrices over Z/p^mu.
//!
//! Vectors are rows and act from the left: `v -> v * A`.

use crate::error::{Error, Result};
use crate::ring::RingCtx;
use crate::submodule::Submodule;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    ctx: RingCtx,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Solve `X * A = B`.
    Left,
    /// Solve `A * X = B`.
    Right,
}

/// `u * d * v` reproduces the input; `d` is diagonal with entries `p^exponents[i]`.
#[derive(Debug, Clone)]
pub struct SmithDecomp {
    pub u: Mat,
    pub d: Mat,
    pub v: Mat,
    pub exponents: Vec<u32>,
}

impl Mat {
    pub fn zeros(ctx: RingCtx, rows: usize, cols: usize) -> Mat {
        Mat { ctx, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(ctx: RingCtx, n: usize) -> Mat {
        let mut m = Mat::zeros(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(ctx: RingCtx, n: usize, s: i64) -> Mat {
        Mat::identity(ctx, n).scale(ctx.reduce(s))
    }

    pub fn from_fn(ctx: RingCtx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(ctx.reduce(f(i, j)));
            }
        }
        Mat { ctx, rows, cols, data }
    }

    pub fn from_vec(ctx: RingCtx, rows: usize, cols: usize, data: Vec<u64>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::DimMismatch(format!("{} entries for {}x{}", data.len(), rows, cols)));
        }
        let data = data.into_iter().map(|x| x % ctx.modulus()).collect();
        Ok(Mat { ctx, rows, cols, data })
    }

    /// Build from rows; an empty list gives a 0x0 matrix unless `cols` is forced with [`Mat::from_rows_with_cols`].
    pub fn from_rows(ctx: RingCtx, rows: &[Vec<i64>]) -> Result<Mat> {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows_with_cols(ctx, rows, cols)
    }

    pub fn from_rows_with_cols(ctx: RingCtx, rows: &[Vec<i64>], cols: usize) -> Result<Mat> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimMismatch("ragged rows".into()));
        }
        Ok(Mat::from_fn(ctx, rows.len(), cols, |i, j| rows[i][j]))
    }

    pub fn row_vector(ctx: RingCtx, v: &[u64]) -> Mat {
        Mat { ctx, rows: 1, cols: v.len(), data: v.iter().map(|x| x % ctx.modulus()).collect() }
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.ctx.modulus();
    }

    pub fn row(&self, i: usize) -> Vec<u64> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.ctx, self.rows)
    }

    fn check_ctx(&self, other: &Mat) -> Result<()> {
        if self.ctx != other.ctx {
            Err(Error::MixedContext)
        } else {
            Ok(())
        }
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.check_ctx(other)?;
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let q = self.ctx.modulus();
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = (*o + a * b) % q;
                }
            }
        }
        Ok(Mat { ctx: self.ctx, rows: self.rows, cols: other.cols, data: out })
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.check_ctx(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimMismatch("addition".into()));
        }
        let c = self.ctx;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| c.add(a, b)).collect();
        Ok(Mat { ctx: c, rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Mat {
        let c = self.ctx;
        Mat { data: self.data.iter().map(|&a| c.neg(a)).collect(), ..self.clone() }
    }

    pub fn scale(&self, s: u64) -> Mat {
        let c = self.ctx;
        Mat { data: self.data.iter().map(|&a| c.mul(a, s % c.modulus())).collect(), ..self.clone() }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut base = self.clone();
        let mut r = Mat::identity(self.ctx, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        r
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols, "block out of range");
        Mat::from_fn(self.ctx, r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j) as i64)
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j);
            }
        }
    }

    /// Assemble a matrix from a grid of blocks; every row of blocks shares a height,
    /// every column of blocks shares a width.
    pub fn block_compose(grid: &[Vec<Mat>]) -> Result<Mat> {
        let first = grid.first().and_then(|r| r.first()).ok_or_else(|| Error::DimMismatch("empty grid".into()))?;
        let ctx = first.ctx;
        let ncols = grid[0].len();
        if grid.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimMismatch("ragged block grid".into()));
        }
        let heights: Vec<usize> = grid.iter().map(|r| r[0].rows).collect();
        let widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        for (bi, row) in grid.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                b.check_ctx(first)?;
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::DimMismatch(format!("block ({bi},{bj}) is {}x{}", b.rows, b.cols)));
                }
            }
        }
        let mut out = Mat::zeros(ctx, heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                out.set_block(r0, c0, b);
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.ctx, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    /// `diag(self, 1_k)` with `k` chosen so the result is `n x n`.
    pub fn pad_identity(&self, n: usize) -> Mat {
        assert!(self.is_square() && n >= self.rows);
        self.direct_sum(&Mat::identity(self.ctx, n - self.rows))
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.ctx, self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut out = Mat::zeros(self.ctx, self.rows + other.rows, self.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, 0, other);
        out
    }

    /// Image under `Z/p^mu -> Z/p^k`.
    pub fn reduce_level(&self, k: u32) -> Result<Mat> {
        let ctx = self.ctx.at_level(k)?;
        Ok(Mat { ctx, data: self.data.iter().map(|x| x % ctx.modulus()).collect(), ..self.clone() })
    }

    /// Same integer entries read in another ring (used to lift mod-p data).
    pub fn lift_to(&self, ctx: RingCtx) -> Mat {
        Mat { ctx, data: self.data.iter().map(|x| x % ctx.modulus()).collect(), ..self.clone() }
    }

    pub fn mod_p(&self) -> Mat {
        self.reduce_level(1).expect("level 1 always exists")
    }

    pub fn try_inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let c = self.ctx;
        let mut a = self.clone();
        let mut inv = Mat::identity(c, n);
        for col in 0..n {
            let piv = (col..n).find(|&r| c.is_unit(a.get(r, col))).ok_or(Error::NotInvertible)?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let s = c.inv(a.get(col, col))?;
            a.scale_row(col, s);
            inv.scale_row(col, s);
            for r in 0..n {
                if r != col {
                    let f = a.get(r, col);
                    if f != 0 {
                        a.add_row_multiple(r, col, c.neg(f));
                        inv.add_row_multiple(r, col, c.neg(f));
                    }
                }
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let p = self.ctx.p();
        let mut a: Vec<u64> = self.data.iter().map(|x| x % p).collect();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return false;
            };
            if piv != col {
                for k in 0..n {
                    a.swap(piv * n + k, col * n + k);
                }
            }
            let inv = inv_mod_prime(a[col * n + col], p);
            for r in col + 1..n {
                let f = a[r * n + col] * inv % p;
                if f != 0 {
                    for k in col..n {
                        a[r * n + k] = (a[r * n + k] + (p - f) * a[col * n + k]) % p;
                    }
                }
            }
        }
        true
    }

    /// True iff `(A mod p)^n = 0`.
    pub fn is_nilpotent(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        Ok(self.mod_p().pow(self.rows as u64).is_zero())
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.cols {
                self.data.swap(i * self.cols + k, j * self.cols + k);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.rows {
                self.data.swap(k * self.cols + i, k * self.cols + j);
            }
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, s: u64) {
        for k in 0..self.cols {
            self.data[i * self.cols + k] = self.ctx.mul(self.data[i * self.cols + k], s);
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, s: u64) {
        for k in 0..self.rows {
            self.data[k * self.cols + j] = self.ctx.mul(self.data[k * self.cols + j], s);
        }
    }

    /// row_i += f * row_t
    pub(crate) fn add_row_multiple(&mut self, i: usize, t: usize, f: u64) {
        for k in 0..self.cols {
            let v = self.ctx.mul(self.data[t * self.cols + k], f);
            self.data[i * self.cols + k] = self.ctx.add(self.data[i * self.cols + k], v);
        }
    }

    /// col_j += f * col_t
    pub(crate) fn add_col_multiple(&mut self, j: usize, t: usize, f: u64) {
        for k in 0..self.rows {
            let v = self.ctx.mul(self.data[k * self.cols + t], f);
            self.data[k * self.cols + j] = self.ctx.add(self.data[k * self.cols + j], v);
        }
    }

    /// Diagonalization `U * D * V = A` by unit-pivot elimination.
    pub fn smith_diagonal(&self) -> SmithDecomp {
        let c = self.ctx;
        let (r, k) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = Mat::identity(c, r);
        let mut v = Mat::identity(c, k);
        let mut exponents = Vec::with_capacity(r.min(k));
        for t in 0..r.min(k) {
            // minimal valuation, ties row-major
            let mut best: Option<(u32, usize, usize)> = None;
            for i in t..r {
                for j in t..k {
                    let val = c.valuation(d.get(i, j));
                    if val < c.mu() && best.map_or(true, |(bv, _, _)| val < bv) {
                        best = Some((val, i, j));
                    }
                }
            }
            let Some((s, pi, pj)) = best else {
                exponents.extend(std::iter::repeat(c.mu()).take(r.min(k) - t));
                break;
            };
            d.swap_rows(t, pi);
            u.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_rows(t, pj);
            let ps = c.p_pow(s);
            let unit = d.get(t, t) / ps;
            let unit_inv = c.inv(unit).expect("pivot cofactor is a unit");
            d.scale_row(t, unit_inv);
            u.scale_col(t, unit);
            for i in t + 1..r {
                let f = d.get(i, t) / ps;
                if f != 0 {
                    d.add_row_multiple(i, t, c.neg(f));
                    u.add_col_multiple(t, i, f);
                }
            }
            for j in t + 1..k {
                let f = d.get(t, j) / ps;
                if f != 0 {
                    d.add_col_multiple(j, t, c.neg(f));
                    v.add_row_multiple(t, j, f);
                }
            }
            exponents.push(s);
        }
        SmithDecomp { u, d, v, exponents }
    }

    /// `{ v : v * A = 0 }`.
    pub fn kernel(&self) -> Submodule {
        let sd = self.smith_diagonal();
        let c = self.ctx;
        let uinv = sd.u.try_inverse().expect("smith U is invertible");
        let mut gens = Vec::new();
        for i in 0..self.rows {
            let s = sd.exponents.get(i).copied().unwrap_or(0);
            // coordinate i is free when it meets no column
            let factor = if i < sd.exponents.len() { c.p_pow(c.mu() - s) } else { 1 };
            if factor == 0 {
                continue;
            }
            gens.push(uinv.row(i).iter().map(|&x| c.mul(x, factor)).collect::<Vec<u64>>());
        }
        Submodule::from_vectors(c, self.rows, &gens)
    }

    /// One solution of `x * A = b` for a row vector `b`, if any.
    pub fn solve_row(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.cols);
        let c = self.ctx;
        let sd = self.smith_diagonal();
        let vinv = sd.v.try_inverse().expect("smith V is invertible");
        let bp = &Mat::row_vector(c, b) * &vinv;
        let mut y = vec![0u64; self.rows];
        for j in 0..self.cols {
            let t = bp.get(0, j);
            if j < sd.exponents.len() {
                let s = sd.exponents[j];
                if s >= c.mu() {
                    if t != 0 {
                        return None;
                    }
                } else {
                    let ps = c.p_pow(s);
                    if t % ps != 0 {
                        return None;
                    }
                    y[j] = t / ps;
                }
            } else if t != 0 {
                return None;
            }
        }
        let uinv = sd.u.try_inverse().expect("smith U is invertible");
        Some((&Mat::row_vector(c, &y) * &uinv).row(0))
    }

    /// Some `X` with `X * A = B` (left) or `A * X = B` (right).
    pub fn solve_linear(&self, b: &Mat, side: Side) -> Result<Mat> {
        self.check_ctx(b)?;
        match side {
            Side::Left => {
                if b.cols != self.cols {
                    return Err(Error::DimMismatch("X*A=B needs equal column counts".into()));
                }
                let mut x = Mat::zeros(self.ctx, b.rows, self.rows);
                for i in 0..b.rows {
                    let sol = self.solve_row(&b.row(i)).ok_or(Error::NoSolution)?;
                    for (j, s) in sol.into_iter().enumerate() {
                        x.set(i, j, s);
                    }
                }
                Ok(x)
            }
            Side::Right => {
                if b.rows != self.rows {
                    return Err(Error::DimMismatch("A*X=B needs equal row counts".into()));
                }
                Ok(self.transpose().solve_linear(&b.transpose(), Side::Left)?.transpose())
            }
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{}]{:?}", self.ctx, self.to_rows())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        if f.alternate() {
            rows.iter().try_for_each(|r| writeln!(f, "[{r}]"))
        } else {
            write!(f, "[{}]", rows.join("; "))
        }
    }
}

impl std::ops::Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl std::ops::Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl std::ops::Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

impl std::ops::Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat::neg(self)
    }
}

/// Solution set of a linear system `x * A = b` as `particular + kernel`.
pub fn affine_solutions(a: &Mat, b: &[u64]) -> Option<(Vec<u64>, Submodule)> {
    let x0 = a.solve_row(b)?;
    Some((x0, a.kernel()))
}

fn inv_mod_prime(a: u64, p: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

type GlTable = Arc<Vec<Mat>>;

fn gl_cache() -> &'static Mutex<HashMap<(RingCtx, usize), GlTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(RingCtx, usize), GlTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Order of GL(n, Z/p^mu).
pub fn gl_order(ctx: RingCtx, n: usize) -> u128 {
    let p = ctx.p() as u128;
    let mut ord: u128 = 1;
    for i in 0..n {
        ord = ord.saturating_mul(p.pow(n as u32).saturating_sub(p.pow(i as u32)));
    }
    let lift = p.saturating_pow(((ctx.mu() - 1) as usize * n * n) as u32);
    ord.saturating_mul(lift)
}

/// Every element of GL(n, Z/p^mu) in lexicographic entry order; cached.
pub fn general_linear(ctx: RingCtx, n: usize, cap: usize) -> Result<GlTable> {
    if let Some(t) = gl_cache().lock().unwrap().get(&(ctx, n)) {
        return Ok(t.clone());
    }
    let total = (ctx.modulus() as u128).saturating_pow((n * n) as u32);
    if gl_order(ctx, n) > cap as u128 || total > (cap as u128).saturating_mul(16) {
        return Err(Error::CapExceeded { cap });
    }
    let q = ctx.modulus();
    let mut out = Vec::with_capacity(gl_order(ctx, n) as usize);
    let mut digits = vec![0u64; n * n];
    loop {
        let m = Mat { ctx, rows: n, cols: n, data: digits.clone() };
        if m.is_invertible() {
            out.push(m);
        }
        let mut i = n * n;
        loop {
            if i == 0 {
                let t = Arc::new(out);
                gl_cache().lock().unwrap().insert((ctx, n), t.clone());
                return Ok(t);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Every matrix with the given shape, lexicographic.
pub fn all_matrices(ctx: RingCtx, rows: usize, cols: usize) -> impl Iterator<Item = Mat> {
    let q = ctx.modulus();
    let len = rows * cols;
    let total = q.pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut data = vec![0u64; len];
        for k in (0..len).rev() {
            data[k] = idx % q;
            idx /= q;
        }
        Mat { ctx, rows, cols, data }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z9() -> RingCtx {
        RingCtx::new(3, 2).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(z9(), &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(m(&[&[1, 1], &[0, 1]]).try_inverse().unwrap(), m(&[&[1, 8], &[0, 1]]));
        assert_eq!(m(&[&[3, 0], &[0, 1]]).try_inverse(), Err(Error::NotInvertible));
        assert_eq!(Mat::identity(z9(), 3).try_inverse().unwrap(), Mat::identity(z9(), 3));
    }

    #[test]
    fn nilpotency_examples() {
        assert!(m(&[&[0, 1], &[0, 0]]).is_nilpotent().unwrap());
        assert!(Mat::scalar(z9(), 2, 3).is_nilpotent().unwrap());
        assert!(!m(&[&[1, 0], &[0, 0]]).is_nilpotent().unwrap());
    }

    #[test]
    fn nilpotency_matches_powering() {
        for a in all_matrices(z9(), 2, 2) {
            assert_eq!(a.is_nilpotent().unwrap(), a.pow(4).is_zero());
        }
    }

    #[test]
    fn smith_examples() {
        assert_eq!(m(&[&[3, 0], &[0, 1]]).smith_diagonal().exponents, vec![0, 1]);
        assert_eq!(Mat::zeros(z9(), 2, 2).smith_diagonal().exponents, vec![2, 2]);
        let a = m(&[&[6, 3], &[3, 3]]);
        let sd = a.smith_diagonal();
        assert_eq!(sd.exponents, vec![1, 1]);
        assert_eq!(&(&sd.u * &sd.d) * &sd.v, a);
    }

    #[test]
    fn kernel_examples() {
        let k = m(&[&[3]]).kernel();
        assert_eq!(k.elements().len(), 3);
        assert!(Mat::identity(z9(), 2).kernel().is_zero());
        let k = m(&[&[3, 0], &[0, 1]]).kernel();
        assert_eq!(k, Submodule::from_vectors(z9(), 2, &[vec![3, 0]]));
    }

    #[test]
    fn solve_examples() {
        let b = m(&[&[4, 5]]);
        assert_eq!(Mat::identity(z9(), 2).solve_linear(&b, Side::Left).unwrap(), b);
        let x = m(&[&[3]]).solve_linear(&m(&[&[6]]), Side::Left).unwrap();
        assert_eq!(&x * &m(&[&[3]]), m(&[&[6]]));
        assert_eq!(m(&[&[3]]).solve_linear(&m(&[&[1]]), Side::Right), Err(Error::NoSolution));
    }

    #[test]
    fn block_compose_and_transpose() {
        let one = |x| m(&[&[x]]);
        let g = Mat::block_compose(&[vec![one(1), one(2)], vec![one(3), one(4)]]).unwrap();
        assert_eq!(g, m(&[&[1, 2], &[3, 4]]));
        assert_eq!(g.transpose().transpose(), g);
        assert_eq!(&Mat::identity(z9(), 2) * &g, g);
    }

    #[test]
    fn gl_orders() {
        let z3 = RingCtx::new(3, 1).unwrap();
        assert_eq!(gl_order(z3, 2), 48);
        assert_eq!(gl_order(z9(), 2), 3888);
        assert_eq!(gl_order(z3, 3), 11232);
        assert_eq!(general_linear(z3, 2, 100_000).unwrap().len(), 48);
    }
}
