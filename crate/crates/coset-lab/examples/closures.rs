//! Finite closures: GL(3, Z/3) from diag(1, GL(2)) and one X, and the inverse-semigroup
//! axioms on End_L(1).

use coset_lab::partial_iso::{enumerate_end, LMorphism};
use coset_lab::stabilizer::{closure, closure_with, gl3_generation_check, is_inverse_semigroup, Law};
use coset_lab::{Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    println!("closure inside GL(3, Z/3): {} elements", gl3_generation_check()?);

    let z9 = RingCtx::new(3, 2)?;
    let t = Mat::from_rows(z9, &[vec![1, 1], vec![0, 1]])?;
    let w = Mat::from_rows(z9, &[vec![0, 1], vec![8, 0]])?;
    println!("<t, w> in GL(2, Z/9): {}", closure(&[t, w], Law::Group, 10_000)?.len());

    let z3 = RingCtx::new(3, 1)?;
    let mul = |a: &LMorphism, b: &LMorphism| a.l_compose(b).unwrap();
    let star = |a: &LMorphism| a.l_adjoint();
    let s = closure_with(&enumerate_end(z3, 1), mul, Some(star), 100);
    println!("End_L(1): {} elements, violation: {:?}", s.len(), is_inverse_semigroup(&s, mul, star)?);
    Ok(())
}
