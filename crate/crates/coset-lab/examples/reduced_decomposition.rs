//! `[1 b; c 1]` with bc nilpotent, written as a·X(b, c).

use coset_lab::idempotent::{decompose_reduced, decomposition_certificate, square_pair, ReducedElement};
use coset_lab::partial_iso::pi_functor;
use coset_lab::{DoubleCoset, Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    let z9 = RingCtx::new(3, 2)?;
    let b = Mat::from_rows(z9, &[vec![1]])?;
    let c = Mat::from_rows(z9, &[vec![3]])?;
    let g = DoubleCoset::new(1, 1, square_pair(&b, &c)?)?;
    let red = decompose_reduced(&g)?;
    if let ReducedElement::Element { a, x, u, .. } = &red {
        println!("a = {a}, L = {}, M = {}, u = {u}", x.l.generators(), x.m.generators());
    }
    let ax = red.rebuild().expect("nonzero");
    println!("same Π image: {}", pi_functor(&g) == pi_functor(&ax));
    println!("input ~ a·X in Γ: {}", g.equivalent(&ax, 1 << 20)?);
    let (lhs, rhs) = decomposition_certificate(&g, &red)?.expect("nonzero");
    println!("g ∘ E ~ a·X: {}", lhs.equivalent(&rhs, 1 << 20)?);

    let z3 = RingCtx::new(3, 1)?;
    let degenerate = DoubleCoset::new(1, 1, Mat::from_rows(z3, &[vec![0, 1], vec![1, 0]])?)?;
    println!("degenerate input: {:?}", decompose_reduced(&degenerate)?);
    Ok(())
}
