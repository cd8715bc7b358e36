use coset_lab::induced::coset_stabilization_check;
use coset_lab::{DoubleCoset, Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    let z3 = RingCtx::new(3, 1)?;
    let g1 = DoubleCoset::new(1, 1, Mat::from_rows(z3, &[vec![1, 2], vec![1, 0]])?)?;
    let g2 = DoubleCoset::new(1, 1, Mat::from_rows(z3, &[vec![2, 1], vec![1, 1]])?)?;
    let r = coset_stabilization_check(&g1, &g2, 0..=4, 1 << 20)?;
    println!("j = {:?}", r.j_values);
    println!("constant: {}, equals the block product: {}", r.constant, r.matches_compose);
    Ok(())
}
