use coset_lab::{DoubleCoset, Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    let z3 = RingCtx::new(3, 1)?;
    let g1 = DoubleCoset::new(1, 1, Mat::from_rows(z3, &[vec![1, 1], vec![2, 0]])?)?;
    let g2 = DoubleCoset::new(1, 2, Mat::from_rows(z3, &[vec![0, 1, 1], vec![1, 0, 0], vec![0, 2, 1]])?)?;

    let prod = g1.compose(&g2)?;
    println!("g1 ∘ g2 = {}", prod.rep());

    // the literal product with theta stabilizes once j reaches N - beta
    let j0 = g1.stable_j(&g2);
    for j in j0..j0 + 3 {
        let lit = g1.literal_product(&g2, j)?;
        println!("j = {j}: size {} equivalent to the block product: {}", lit.size(), lit.equivalent(&prod, 1 << 20)?);
    }

    let lhs = prod.involution();
    let rhs = g2.involution().compose(&g1.involution())?;
    println!("(g1 g2)* ~ g2* g1*: {}", lhs.equivalent(&rhs, 1 << 20)?);
    Ok(())
}
