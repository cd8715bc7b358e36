use coset_lab::partial_iso::{enumerate_end, pi_functor};
use coset_lab::{DoubleCoset, Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    let z9 = RingCtx::new(3, 2)?;
    let g1 = DoubleCoset::new(2, 1, Mat::from_rows(z9, &[vec![1, 3, 0], vec![0, 1, 3], vec![1, 0, 1]])?)?;
    let g2 = DoubleCoset::new(1, 1, Mat::from_rows(z9, &[vec![2, 3], vec![3, 1]])?)?;

    let pi = pi_functor(&g1.compose(&g2)?);
    let composed = pi_functor(&g1).l_compose(&pi_functor(&g2))?;
    println!("Π(g1 ∘ g2) = {:?}", pi.xi_plus);
    println!("functorial: {}, compatible: {}", pi.l_equal(&composed), pi.is_compatible_exhaustive());

    let z3 = RingCtx::new(3, 1)?;
    let end = enumerate_end(z3, 1);
    let idem = end.iter().filter(|m| m.is_idempotent()).count();
    println!("End_L(1) over Z/3: {} elements, {idem} idempotents", end.len());
    Ok(())
}
