//! Deciding `diag(1, u) g diag(1, v) = g'` and recovering the witness.

use coset_lab::{DoubleCoset, Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    let z9 = RingCtx::new(3, 2)?;
    let g = Mat::from_rows(z9, &[vec![1, 3, 0], vec![2, 1, 4], vec![0, 1, 2]])?;
    let u = Mat::from_rows(z9, &[vec![2, 1], vec![1, 1]])?;
    let v = Mat::from_rows(z9, &[vec![1, 5], vec![0, 4]])?;
    let moved = &(&Mat::identity(z9, 1).direct_sum(&u) * &g) * &Mat::identity(z9, 1).direct_sum(&v);

    let g1 = DoubleCoset::new(1, 1, g)?;
    let g2 = DoubleCoset::new(1, 1, moved)?;
    match g1.find_equivalence(&g2, 1 << 20)? {
        Some((u, v)) => println!("equivalent via u = {u}, v = {v}"),
        None => println!("not equivalent"),
    }

    let other = DoubleCoset::new(1, 1, Mat::from_rows(z9, &[vec![4, 3], vec![1, 1]])?)?;
    println!("g1 ~ other: {}", g1.equivalent(&other, 1 << 20)?);
    Ok(())
}
