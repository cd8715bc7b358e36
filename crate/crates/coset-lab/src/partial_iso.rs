//! Compatible pairs of partial isomorphisms and the functor Π.

use crate::coset::{pairing, DoubleCoset};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Side};
use crate::ring::RingCtx;
use crate::submodule::Submodule;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

/// `v -> v * matrix` restricted to `domain`. Equality is extensional.
#[derive(Clone)]
pub struct PartialIso {
    domain: Submodule,
    matrix: Mat,
}

impl PartialIso {
    pub fn new(domain: Submodule, matrix: Mat) -> Result<PartialIso> {
        if domain.ambient_rank() != matrix.rows() {
            return Err(Error::RankMismatch);
        }
        let gens = domain.generators();
        if gens.rows() > 0 {
            // injective on the domain: the kernel of matrix meets it trivially
            if !matrix.kernel().intersect(&domain)?.is_zero() {
                return Err(Error::DimMismatch("map is not injective on its domain".into()));
            }
        }
        Ok(PartialIso { domain, matrix })
    }

    pub fn identity(ctx: RingCtx, n: usize) -> PartialIso {
        PartialIso { domain: Submodule::full(ctx, n), matrix: Mat::identity(ctx, n) }
    }

    pub fn empty(ctx: RingCtx, from: usize, to: usize) -> PartialIso {
        PartialIso { domain: Submodule::zero(ctx, from), matrix: Mat::zeros(ctx, from, to) }
    }

    pub fn domain(&self) -> &Submodule {
        &self.domain
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn source_rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn target_rank(&self) -> usize {
        self.matrix.cols()
    }

    pub fn image(&self) -> Submodule {
        let g = self.domain.generators();
        if g.rows() == 0 {
            return Submodule::zero(self.matrix.ctx(), self.target_rank());
        }
        Submodule::from_generators(&(g * &self.matrix))
    }

    pub fn apply(&self, v: &[u64]) -> Result<Vec<u64>> {
        if !self.domain.contains(v)? {
            return Err(Error::DimMismatch("vector outside the domain".into()));
        }
        Ok((&Mat::row_vector(self.matrix.ctx(), v) * &self.matrix).row(0))
    }

    /// Images of the canonical domain generators.
    fn values(&self) -> Vec<Vec<u64>> {
        let g = self.domain.generators();
        if g.rows() == 0 {
            return Vec::new();
        }
        (g * &self.matrix).to_rows()
    }

    /// `self` first, then `next`; the domain is pulled back.
    pub fn then(&self, next: &PartialIso) -> Result<PartialIso> {
        if self.target_rank() != next.source_rank() {
            return Err(Error::ObjectMismatch);
        }
        let ctx = self.matrix.ctx();
        let product = &self.matrix * &next.matrix;
        let g = self.domain.generators();
        if g.rows() == 0 || next.domain.is_zero() {
            return Ok(PartialIso { domain: Submodule::zero(ctx, self.source_rank()), matrix: product });
        }
        let test = &(g * &self.matrix) * &next.domain.as_kernel();
        let coeffs = test.kernel();
        let domain = if coeffs.is_zero() {
            Submodule::zero(ctx, self.source_rank())
        } else {
            Submodule::from_generators(&(coeffs.generators() * g))
        };
        Ok(PartialIso { domain, matrix: product })
    }

    /// The inverse partial bijection, extended to the whole target.
    pub fn inverse(&self) -> PartialIso {
        let ctx = self.matrix.ctx();
        let g = self.domain.generators();
        let image = self.image();
        if g.rows() == 0 {
            return PartialIso { domain: image, matrix: Mat::zeros(ctx, self.target_rank(), self.source_rank()) };
        }
        let gm = g * &self.matrix;
        let back = gm.solve_linear(g, Side::Right).expect("free modules over Z/p^mu are injective");
        PartialIso { domain: image, matrix: back }
    }
}

impl PartialEq for PartialIso {
    fn eq(&self, other: &Self) -> bool {
        self.matrix.cols() == other.matrix.cols() && self.domain == other.domain && self.values() == other.values()
    }
}

impl Eq for PartialIso {}

impl Hash for PartialIso {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.domain.hash(state);
        self.matrix.cols().hash(state);
        self.values().hash(state);
    }
}

impl fmt::Debug for PartialIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}", self.domain.generators().to_rows(), self.values())
    }
}

/// A morphism of L: a pair `(xi_plus, xi_minus)` preserving the pairing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LMorphism {
    pub xi_plus: PartialIso,
    pub xi_minus: PartialIso,
}

impl LMorphism {
    pub fn new(xi_plus: PartialIso, xi_minus: PartialIso) -> Result<LMorphism> {
        if xi_plus.source_rank() != xi_minus.source_rank() || xi_plus.target_rank() != xi_minus.target_rank() {
            return Err(Error::ObjectMismatch);
        }
        let m = LMorphism { xi_plus, xi_minus };
        if !m.is_compatible() {
            return Err(Error::DimMismatch("partial isomorphisms are not compatible".into()));
        }
        Ok(m)
    }

    pub fn identity(ctx: RingCtx, n: usize) -> LMorphism {
        LMorphism { xi_plus: PartialIso::identity(ctx, n), xi_minus: PartialIso::identity(ctx, n) }
    }

    /// The element with both domains zero.
    pub fn zero(ctx: RingCtx, from: usize, to: usize) -> LMorphism {
        LMorphism { xi_plus: PartialIso::empty(ctx, from, to), xi_minus: PartialIso::empty(ctx, from, to) }
    }

    pub fn source(&self) -> usize {
        self.xi_plus.source_rank()
    }

    pub fn target(&self) -> usize {
        self.xi_plus.target_rank()
    }

    /// Pairing preserved on generator pairs; bilinearity covers the rest.
    pub fn is_compatible(&self) -> bool {
        let ctx = self.xi_plus.matrix.ctx();
        let gp = self.xi_plus.domain.generators().to_rows();
        let gm = self.xi_minus.domain.generators().to_rows();
        let ip = self.xi_plus.values();
        let im = self.xi_minus.values();
        gp.iter().zip(&ip).all(|(y, yi)| {
            gm.iter().zip(&im).all(|(z, zi)| pairing(ctx, yi, zi) == pairing(ctx, y, z))
        })
    }

    /// Pairing preserved on every pair of domain elements.
    pub fn is_compatible_exhaustive(&self) -> bool {
        let ctx = self.xi_plus.matrix.ctx();
        let dp = self.xi_plus.domain.elements();
        let dm = self.xi_minus.domain.elements();
        let ip: Vec<Vec<u64>> = dp.iter().map(|v| self.xi_plus.apply(v).expect("in domain")).collect();
        let im: Vec<Vec<u64>> = dm.iter().map(|v| self.xi_minus.apply(v).expect("in domain")).collect();
        dp.iter().zip(&ip).all(|(y, yi)| {
            dm.iter().zip(&im).all(|(z, zi)| pairing(ctx, yi, zi) == pairing(ctx, y, z))
        })
    }

    /// `self` first, then `other`: matches `Π(g1 ∘ g2) = Π(g1) ∘ Π(g2)`.
    pub fn l_compose(&self, other: &LMorphism) -> Result<LMorphism> {
        Ok(LMorphism { xi_plus: self.xi_plus.then(&other.xi_plus)?, xi_minus: self.xi_minus.then(&other.xi_minus)? })
    }

    pub fn l_adjoint(&self) -> LMorphism {
        LMorphism { xi_plus: self.xi_plus.inverse(), xi_minus: self.xi_minus.inverse() }
    }

    pub fn l_bigstar(&self) -> LMorphism {
        LMorphism { xi_plus: self.xi_minus.clone(), xi_minus: self.xi_plus.clone() }
    }

    pub fn l_equal(&self, other: &LMorphism) -> bool {
        self == other
    }

    pub fn is_idempotent(&self) -> bool {
        self.source() == self.target() && self.l_compose(self).map(|s| s == *self).unwrap_or(false)
    }
}

/// Π(g) = (a restricted to ker b, A^t restricted to ker C^t), with `g^{-1} = [A B; C D]`.
pub fn pi_functor(g: &DoubleCoset) -> LMorphism {
    let (a, b, _, _) = g.blocks();
    let inv = g.rep().try_inverse().expect("representatives are invertible");
    let (big_a, _, big_c, _) = crate::coset::split(&inv, g.beta(), g.alpha());
    let ctx = g.ctx();
    let dom_plus = kernel_or_full(ctx, &b);
    let dom_minus = kernel_or_full(ctx, &big_c.transpose());
    LMorphism {
        xi_plus: PartialIso { domain: dom_plus, matrix: a },
        xi_minus: PartialIso { domain: dom_minus, matrix: big_a.transpose() },
    }
}

fn kernel_or_full(ctx: RingCtx, m: &Mat) -> Submodule {
    if m.cols() == 0 {
        Submodule::full(ctx, m.rows())
    } else {
        m.kernel()
    }
}

/// Every element of End_L(n), by enumeration of domains and matrices.
pub fn enumerate_end(ctx: RingCtx, n: usize) -> Vec<LMorphism> {
    let doms = Submodule::enumerate_all(ctx, n);
    let mut isos: Vec<PartialIso> = Vec::new();
    let mut seen = HashSet::new();
    for d in &doms {
        for m in crate::linalg::all_matrices(ctx, n, n) {
            if let Ok(pi) = PartialIso::new(d.clone(), m) {
                if seen.insert(pi.clone()) {
                    isos.push(pi);
                }
            }
        }
    }
    let mut out = Vec::new();
    for p in &isos {
        for q in &isos {
            let m = LMorphism { xi_plus: p.clone(), xi_minus: q.clone() };
            if m.is_compatible() {
                out.push(m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3() -> RingCtx {
        RingCtx::new(3, 1).unwrap()
    }

    #[test]
    fn pi_of_identity_is_total() {
        let id = DoubleCoset::identity(z3(), 2);
        assert_eq!(pi_functor(&id), LMorphism::identity(z3(), 2));
    }

    #[test]
    fn pi_of_swap_is_zero() {
        let swap = Mat::from_rows(z3(), &[vec![0, 1], vec![1, 0]]).unwrap();
        let g = DoubleCoset::new(1, 1, swap).unwrap();
        assert_eq!(pi_functor(&g), LMorphism::zero(z3(), 1, 1));
    }

    #[test]
    fn adjoint_and_bigstar_are_involutive() {
        let id = LMorphism::identity(z3(), 2);
        assert_eq!(id.l_adjoint(), id);
        let g = DoubleCoset::new(1, 1, Mat::from_rows(z3(), &[vec![2, 1], vec![1, 1]]).unwrap()).unwrap();
        let m = pi_functor(&g);
        assert_eq!(m.l_bigstar().l_bigstar(), m);
        assert_eq!(m.l_adjoint().l_adjoint(), m);
    }

    #[test]
    fn zero_absorbs() {
        let z = LMorphism::zero(z3(), 1, 1);
        let id = LMorphism::identity(z3(), 1);
        assert_eq!(z.l_compose(&id).unwrap(), z);
        assert_eq!(id.l_compose(&id).unwrap(), id);
    }

    #[test]
    fn end_l_one_has_seven_elements() {
        assert_eq!(enumerate_end(z3(), 1).len(), 7);
    }
}
