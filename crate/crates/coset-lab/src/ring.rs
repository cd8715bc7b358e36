//! Arithmetic in Z/p^mu for an odd prime p.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingCtx {
    p: u64,
    mu: u32,
    modulus: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl RingCtx {
    pub fn new(p: u64, mu: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) || mu == 0 {
            return Err(Error::BadRing { p, mu });
        }
        let modulus = p.checked_pow(mu).filter(|&q| q < (1 << 31)).ok_or(Error::BadRing { p, mu })?;
        Ok(RingCtx { p, mu, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The same prime at a lower level.
    pub fn at_level(&self, k: u32) -> Result<Self> {
        if k == 0 || k > self.mu {
            return Err(Error::BadLevel(k));
        }
        RingCtx::new(self.p, k)
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.modulus as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.modulus
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.modulus;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn is_unit(&self, a: u64) -> bool {
        a % self.p != 0
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if !self.is_unit(a) {
            return Err(Error::NotUnit);
        }
        // extended Euclid on (a, modulus)
        let (mut r0, mut r1) = (self.modulus as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.reduce(t0))
    }

    /// Largest s <= mu with p^s | a.
    pub fn valuation(&self, a: u64) -> u32 {
        if a == 0 {
            return self.mu;
        }
        let mut s = 0;
        let mut x = a;
        while x % self.p == 0 {
            x /= self.p;
            s += 1;
        }
        s
    }

    pub fn p_pow(&self, s: u32) -> u64 {
        if s >= self.mu {
            0
        } else {
            self.p.pow(s)
        }
    }

    pub fn half(&self) -> u64 {
        self.inv(2).expect("2 is a unit for odd p")
    }

    pub fn elem(&self, value: i64) -> Residue {
        Residue { value: self.reduce(value), ctx: *self }
    }

    pub fn elements(&self) -> impl Iterator<Item = Residue> + '_ {
        (0..self.modulus).map(move |v| Residue { value: v, ctx: *self })
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}^{}", self.p, self.mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    ctx: RingCtx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ctx(&self) -> RingCtx {
        self.ctx
    }

    pub fn arith(self, other: Residue, op: ArithOp) -> Result<Residue> {
        if self.ctx != other.ctx {
            return Err(Error::MixedContext);
        }
        let c = self.ctx;
        let value = match op {
            ArithOp::Add => c.add(self.value, other.value),
            ArithOp::Sub => c.sub(self.value, other.value),
            ArithOp::Mul => c.mul(self.value, other.value),
        };
        Ok(Residue { value, ctx: c })
    }

    pub fn inv(self) -> Result<Residue> {
        Ok(Residue { value: self.ctx.inv(self.value)?, ctx: self.ctx })
    }

    pub fn valuation(self) -> u32 {
        self.ctx.valuation(self.value)
    }

    pub fn reduce_level(self, k: u32) -> Result<Residue> {
        let ctx = self.ctx.at_level(k)?;
        Ok(Residue { value: self.value % ctx.modulus, ctx })
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
