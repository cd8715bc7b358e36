//! Induced representations of GL(n, Z/p^mu) from stabilizers of pairs (L, M),
//! indicator operators, characters, and the coset stabilization check.

use crate::coset::DoubleCoset;
use crate::error::{Error, Result};
use crate::linalg::{general_linear, Mat};
use crate::stabilizer::{bullet_witness, closure_with, StabilizerSpec};
use crate::submodule::Submodule;
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::Arc;

/// Right cosets `Q \ G` with a section and the action table `x · g`.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    pub group: Arc<Vec<Mat>>,
    /// Elements of `Q` in group order.
    pub subgroup: Vec<Mat>,
    /// `s(x)`, with `s(x_0) = 1`.
    pub reps: Vec<Mat>,
    /// `action[x][i]` is the coset `x · group[i]`.
    pub action: Vec<Vec<usize>>,
    index: HashMap<Mat, usize>,
}

/// `(L a, M a^{t-1})` for the rank-`n` embeddings of L and M.
pub type PairKey = (Submodule, Submodule);

fn embed(s: &Submodule, n: usize) -> Submodule {
    let rows: Vec<Vec<u64>> = s
        .generators()
        .to_rows()
        .into_iter()
        .map(|mut r| {
            r.resize(n, 0);
            r
        })
        .collect();
    Submodule::from_vectors(s.ctx(), n, &rows)
}

impl CosetSpace {
    /// Cosets of the stabilizer of `key(1)` under `g -> key(g)`; `key` must satisfy
    /// `key(qg) = key(g)` exactly for `q` in the stabilizer.
    pub fn from_orbit<K, F>(group: Arc<Vec<Mat>>, key: F) -> CosetSpace
    where
        K: std::hash::Hash + Eq + Clone,
        F: Fn(&Mat) -> K,
    {
        let ctx = group[0].ctx();
        let n = group[0].rows();
        let id = Mat::identity(ctx, n);
        let index: HashMap<Mat, usize> = group.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let keys: Vec<K> = group.iter().map(&key).collect();
        let k0 = key(&id);
        let subgroup: Vec<Mat> = group.iter().zip(&keys).filter(|(_, k)| **k == k0).map(|(g, _)| g.clone()).collect();
        // BFS from x_0 so that s(x_0) = 1 and sections are first-seen
        let mut coset_of: HashMap<K, usize> = HashMap::new();
        coset_of.insert(k0, 0);
        let mut reps = vec![id];
        let mut head = 0;
        while head < reps.len() {
            let s = reps[head].clone();
            for g in group.iter() {
                let h = &s * g;
                let k = keys[index[&h]].clone();
                if let std::collections::hash_map::Entry::Vacant(e) = coset_of.entry(k) {
                    e.insert(reps.len());
                    reps.push(h);
                }
            }
            head += 1;
        }
        let action = reps
            .iter()
            .map(|s| group.iter().map(|g| coset_of[&keys[index[&(s * g)]]]).collect())
            .collect();
        CosetSpace { group, subgroup, reps, action, index }
    }

    /// `Ĝ_n[L, M] \ GL(n)` with `n = spec.n`.
    pub fn for_spec(spec: &StabilizerSpec, cap: usize) -> Result<CosetSpace> {
        let group = general_linear(spec.ctx(), spec.n, cap)?;
        let (l, m) = (embed(&spec.l, spec.n), embed(&spec.m, spec.n));
        Ok(CosetSpace::from_orbit(group, move |g: &Mat| pair_key(&l, &m, g)))
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn group_index(&self, g: &Mat) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// `q` with `s(x) g = q s(x g)`.
    pub fn cocycle_element(&self, x: usize, gi: usize) -> Mat {
        let g = &self.group[gi];
        let y = self.action[x][gi];
        &(&self.reps[x] * g) * &self.reps[y].try_inverse().expect("group element")
    }
}

pub fn pair_key(l: &Submodule, m: &Submodule, g: &Mat) -> PairKey {
    let git = g.try_inverse().expect("group element").transpose();
    (l.act(g).expect("ranks agree"), m.act(&git).expect("ranks agree"))
}

/// A one-dimensional character `q -> exp(2 pi i k(q) / e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub e: u32,
    pub values: HashMap<Mat, u32>,
}

impl Character {
    pub fn trivial(subgroup: &[Mat]) -> Character {
        Character { e: 1, values: subgroup.iter().map(|q| (q.clone(), 0)).collect() }
    }

    pub fn exponent(&self, q: &Mat) -> Result<u32> {
        self.values.get(q).copied().ok_or_else(|| Error::NotACharacter("element outside the subgroup".into()))
    }

    pub fn value(&self, q: &Mat) -> Result<Complex64> {
        Ok(root(self.exponent(q)?, self.e))
    }

    pub fn is_trivial(&self) -> bool {
        self.values.values().all(|&k| k == 0)
    }

    /// Homomorphism law on all pairs of the subgroup.
    pub fn check(&self, subgroup: &[Mat]) -> Result<()> {
        for a in subgroup {
            for b in subgroup {
                let ab = self.exponent(&(a * b))?;
                if ab != (self.exponent(a)? + self.exponent(b)?) % self.e {
                    return Err(Error::NotACharacter("multiplicativity fails".into()));
                }
            }
        }
        Ok(())
    }
}

fn root(k: u32, e: u32) -> Complex64 {
    Complex64::from_polar(1.0, TAU * k as f64 / e as f64)
}

fn order(g: &Mat) -> u32 {
    let id = Mat::identity(g.ctx(), g.rows());
    let mut x = g.clone();
    let mut k = 1;
    while x != id {
        x = &x * g;
        k += 1;
    }
    k
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All one-dimensional characters of a finite matrix group.
pub fn characters_of(subgroup: &[Mat]) -> Vec<Character> {
    let e = subgroup.iter().map(order).fold(1, |acc, o| acc / gcd(acc, o) * o);
    // greedy generating set
    let mul = |a: &Mat, b: &Mat| a * b;
    let mut gens: Vec<Mat> = Vec::new();
    let mut span = closure_with(&gens, mul, None::<fn(&Mat) -> Mat>, usize::MAX);
    for q in subgroup {
        if !span.contains(q) {
            gens.push(q.clone());
            span = closure_with(&gens, mul, None::<fn(&Mat) -> Mat>, usize::MAX);
        }
    }
    if gens.is_empty() {
        return vec![Character::trivial(subgroup)];
    }
    let k = gens.len();
    let mut out = Vec::new();
    let total = (e as u64).pow(k as u32);
    'assign: for code in 0..total {
        let mut c = code;
        let vals: Vec<u32> = (0..k)
            .map(|_| {
                let v = (c % e as u64) as u32;
                c /= e as u64;
                v
            })
            .collect();
        // propagate along words in the generators
        let n = subgroup[0].rows();
        let id = Mat::identity(subgroup[0].ctx(), n);
        let mut values: HashMap<Mat, u32> = HashMap::new();
        values.insert(id.clone(), 0);
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            let vx = values[&x];
            for (g, &vg) in gens.iter().zip(&vals) {
                let y = &x * g;
                let vy = (vx + vg) % e;
                match values.get(&y) {
                    Some(&old) if old != vy => continue 'assign,
                    Some(_) => {}
                    None => {
                        values.insert(y.clone(), vy);
                        queue.push(y);
                    }
                }
            }
            head += 1;
        }
        out.push(Character { e, values });
    }
    out
}

/// Characters of `Q` that vanish (exponent 0) on `Q ∩ G•`.
pub fn bullet_trivial_characters(cs: &CosetSpace, spec: &StabilizerSpec) -> Result<Vec<Character>> {
    let bullet = bullet_members(cs, spec)?;
    Ok(characters_of(&cs.subgroup).into_iter().filter(|c| bullet.iter().all(|b| c.values[b] == 0)).collect())
}

fn bullet_members(cs: &CosetSpace, spec: &StabilizerSpec) -> Result<Vec<Mat>> {
    let mut out = Vec::new();
    for q in &cs.subgroup {
        if bullet_witness(q, spec)?.is_some() {
            out.push(q.clone());
        }
    }
    Ok(out)
}

/// `x -> x g` with phases: `ρ(g) f(x) = ω^{phase[x]} f(perm[x])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub perm: Vec<usize>,
    pub phase: Vec<u32>,
    pub e: u32,
}

impl Monomial {
    /// Operator product `self · other`.
    pub fn then(&self, other: &Monomial) -> Monomial {
        let perm = self.perm.iter().map(|&y| other.perm[y]).collect();
        let phase = self.perm.iter().zip(&self.phase).map(|(&y, &a)| (a + other.phase[y]) % self.e).collect();
        Monomial { perm, phase, e: self.e }
    }

    pub fn dense(&self) -> Vec<Vec<Complex64>> {
        let n = self.perm.len();
        let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for x in 0..n {
            m[x][self.perm[x]] = root(self.phase[x], self.e);
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.perm.len()).filter(|&x| self.perm[x] == x).map(|x| root(self.phase[x], self.e)).sum()
    }
}

#[derive(Debug, Clone)]
pub struct InducedRep {
    pub space: CosetSpace,
    pub tau: Character,
    /// `ops[i] = ρ(group[i])`.
    pub ops: Vec<Monomial>,
}

impl InducedRep {
    pub fn dim(&self) -> usize {
        self.space.len()
    }

    /// `U(g, x) = τ(s(x) g s(xg)^{-1})`, as an exponent.
    pub fn cocycle(&self, gi: usize, x: usize) -> u32 {
        self.ops[gi].phase[x]
    }

    /// `U(x, g1 g2) = U(x, g1) U(x g1, g2)` on every triple.
    pub fn cocycle_holds(&self) -> bool {
        let g = &self.space.group;
        let e = self.tau.e;
        (0..self.dim()).all(|x| {
            (0..g.len()).all(|i| {
                let y = self.space.action[x][i];
                (0..g.len()).all(|j| {
                    let ij = self.space.group_index(&(&g[i] * &g[j])).expect("closed");
                    self.cocycle(ij, x) == (self.cocycle(i, x) + self.cocycle(j, y)) % e
                })
            })
        })
    }

    /// `ρ(g1 g2) = ρ(g1) ρ(g2)` on the given index pairs.
    pub fn homomorphism_holds(&self, pairs: impl IntoIterator<Item = (usize, usize)>) -> bool {
        let g = &self.space.group;
        pairs.into_iter().all(|(i, j)| {
            let ij = self.space.group_index(&(&g[i] * &g[j])).expect("closed");
            self.ops[i].then(&self.ops[j]) == self.ops[ij]
        })
    }
}

/// Build `Ind_Q^G τ`. `bullet` lists elements on which τ must be trivial.
pub fn induce(cs: &CosetSpace, tau: &Character, bullet: &[Mat]) -> Result<InducedRep> {
    tau.check(&cs.subgroup)?;
    for b in bullet {
        if tau.exponent(b)? != 0 {
            return Err(Error::NotBulletTrivial);
        }
    }
    let e = tau.e;
    let ops = (0..cs.group.len())
        .map(|gi| {
            let perm: Vec<usize> = (0..cs.len()).map(|x| cs.action[x][gi]).collect();
            let phase = (0..cs.len()).map(|x| tau.exponent(&cs.cocycle_element(x, gi))).collect::<Result<Vec<_>>>()?;
            Ok(Monomial { perm, phase, e })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InducedRep { space: cs.clone(), tau: tau.clone(), ops })
}

/// Induce from a stabilizer spec, checking triviality on `Q ∩ G•`.
pub fn induce_for_spec(cs: &CosetSpace, spec: &StabilizerSpec, tau: &Character) -> Result<InducedRep> {
    let bullet = bullet_members(cs, spec)?;
    induce(cs, tau, &bullet)
}

/// Diagonal of `I_{K,N}`: `I(Q a) = 1` iff `K ⊇ L a` and `N ⊇ M a^{t-1}`.
pub fn indicator_operator(cs: &CosetSpace, spec: &StabilizerSpec, k: &Submodule, n: &Submodule) -> Result<Vec<bool>> {
    if k.ambient_rank() != spec.n || n.ambient_rank() != spec.n {
        return Err(Error::RankMismatch);
    }
    let (l, m) = (embed(&spec.l, spec.n), embed(&spec.m, spec.n));
    cs.reps
        .iter()
        .map(|a| {
            let (la, ma) = pair_key(&l, &m, a);
            Ok(la.is_subset(k)? && ma.is_subset(n)?)
        })
        .collect()
}

/// `ρ(a) I_{K,N} ρ(a)^{-1} = I_{K a^{-1}, N a^t}`, compared as dense matrices.
pub fn equivariance_check(rep: &InducedRep, spec: &StabilizerSpec, a: &Mat, k: &Submodule, n: &Submodule) -> Result<bool> {
    let ai = rep.space.group_index(a).ok_or(Error::NotInvertible)?;
    let inv = a.try_inverse()?;
    let ii = rep.space.group_index(&inv).ok_or(Error::NotInvertible)?;
    let d = indicator_operator(&rep.space, spec, k, n)?;
    let lhs = matmul(&matmul(&rep.ops[ai].dense(), &diag(&d)), &rep.ops[ii].dense());
    let k2 = k.act(&inv)?;
    let n2 = n.act(&a.transpose())?;
    let rhs = diag(&indicator_operator(&rep.space, spec, &k2, &n2)?);
    Ok(lhs.iter().flatten().zip(rhs.iter().flatten()).all(|(x, y)| (x - y).norm() < 1e-9))
}

fn diag(d: &[bool]) -> Vec<Vec<Complex64>> {
    let n = d.len();
    (0..n).map(|i| (0..n).map(|j| Complex64::new(if i == j && d[i] { 1.0 } else { 0.0 }, 0.0)).collect()).collect()
}

fn matmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = a.len();
    let k = b.first().map_or(0, |r| r.len());
    (0..n).map(|i| (0..k).map(|j| (0..b.len()).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

#[derive(Debug, Clone)]
pub struct CharacterReport {
    pub values: Vec<Complex64>,
    /// `|G|^{-1} Σ |χ(g)|^2`.
    pub norm: f64,
    pub integral: bool,
    pub irreducible: bool,
}

pub fn character_tools(rep: &InducedRep) -> CharacterReport {
    let values: Vec<Complex64> = rep.ops.iter().map(Monomial::trace).collect();
    let norm = values.iter().map(|c| c.norm_sqr()).sum::<f64>() / values.len() as f64;
    let integral = (norm - norm.round()).abs() < 1e-6;
    CharacterReport { values, norm, integral, irreducible: (norm - 1.0).abs() < 1e-6 }
}

/// Dimension of the commutant of `ρ(G)` together with the diagonal `patterns`.
///
/// Counts G-orbits on coset pairs `(x, y)` carrying the same pattern whose stabilizer
/// acts with equal phases at `x` and `y`.
pub fn commutant_dimension(rep: &InducedRep, patterns: &[Vec<bool>]) -> usize {
    let n = rep.dim();
    let same = |x: usize, y: usize| patterns.iter().all(|p| p[x] == p[y]);
    let mut seen = vec![vec![false; n]; n];
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            if seen[x][y] || !same(x, y) {
                continue;
            }
            let mut consistent = true;
            for (gi, op) in rep.ops.iter().enumerate() {
                let (xg, yg) = (op.perm[x], op.perm[y]);
                seen[xg][yg] = true;
                if xg == x && yg == y && rep.cocycle(gi, x) != rep.cocycle(gi, y) {
                    consistent = false;
                }
            }
            if consistent {
                count += 1;
            }
        }
    }
    count
}

/// Indicator diagonals for every pair of submodules of the ambient module.
pub fn all_indicators(cs: &CosetSpace, spec: &StabilizerSpec) -> Result<Vec<Vec<bool>>> {
    let subs = Submodule::enumerate_all(spec.ctx(), spec.n);
    let mut out = Vec::new();
    for k in &subs {
        for n in &subs {
            out.push(indicator_operator(cs, spec, k, n)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct StabilizationReport {
    pub j_values: Vec<usize>,
    pub classes: Vec<DoubleCoset>,
    pub constant: bool,
    pub matches_compose: bool,
}

/// `[g1 θ^β(j) g2]` over `j` in the range, from the first legal `j` on.
pub fn coset_stabilization_check(g1: &DoubleCoset, g2: &DoubleCoset, j_range: std::ops::RangeInclusive<usize>, cap: u128) -> Result<StabilizationReport> {
    let j0 = g1.stable_j(g2).max(*j_range.start());
    let j_values: Vec<usize> = (j0..=*j_range.end()).collect();
    let classes = j_values.iter().map(|&j| g1.literal_product(g2, j)).collect::<Result<Vec<_>>>()?;
    let first = classes.first().ok_or_else(|| Error::BadSizes("empty j range".into()))?;
    let mut constant = true;
    for c in &classes[1..] {
        constant &= first.equivalent(c, cap)?;
    }
    let matches_compose = first.equivalent(&g1.compose(g2)?, cap)?;
    Ok(StabilizationReport { j_values, classes, constant, matches_compose })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingCtx;

    fn z3() -> RingCtx {
        RingCtx::new(3, 1).unwrap()
    }

    fn line(ctx: RingCtx, v: Vec<u64>) -> Submodule {
        Submodule::from_vectors(ctx, 2, &[v])
    }

    #[test]
    fn trivial_constraints_give_one_coset() {
        let spec = StabilizerSpec::new(Submodule::zero(z3(), 1), Submodule::zero(z3(), 1), 1).unwrap();
        let cs = CosetSpace::for_spec(&spec, 100).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.subgroup.len(), 2);
    }

    #[test]
    fn lines_count_matches_lagrange() {
        let l = line(z3(), vec![1, 0]);
        let spec = StabilizerSpec::new(l.clone(), l, 2).unwrap();
        let cs = CosetSpace::for_spec(&spec, 100).unwrap();
        assert_eq!(cs.len() * cs.subgroup.len(), 48);
        assert!(cs.reps[0].is_identity());
    }

    #[test]
    fn regular_rep_of_gl1() {
        let g = general_linear(z3(), 1, 10).unwrap();
        let cs = CosetSpace::from_orbit(g, |x: &Mat| x.clone());
        let rep = induce(&cs, &Character::trivial(&cs.subgroup), &[]).unwrap();
        assert!((character_tools(&rep).norm - 2.0).abs() < 1e-9);
    }

    #[test]
    fn full_indicator_is_identity() {
        let l = line(z3(), vec![1, 0]);
        let spec = StabilizerSpec::new(l.clone(), Submodule::zero(z3(), 2), 2).unwrap();
        let cs = CosetSpace::for_spec(&spec, 100).unwrap();
        let full = Submodule::full(z3(), 2);
        assert!(indicator_operator(&cs, &spec, &full, &full).unwrap().iter().all(|&b| b));
        let own = indicator_operator(&cs, &spec, &l, &Submodule::zero(z3(), 2)).unwrap();
        assert!(own[0]);
        assert_eq!(own.iter().filter(|&&b| b).count(), 1);
    }

    #[test]
    fn characters_of_gl2_z3() {
        let g = general_linear(z3(), 2, 100).unwrap();
        // GL(2,3) has abelianization of order 2
        assert_eq!(characters_of(&g).len(), 2);
    }
}
