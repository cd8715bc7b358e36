use coset_lab::{Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    let z9 = RingCtx::new(3, 2)?;
    let a = Mat::from_rows(z9, &[vec![3, 1, 0, 2], vec![6, 2, 0, 4], vec![0, 3, 3, 0]])?;
    let s = a.smith_diagonal();
    println!("A = {a}");
    println!("D = {} (exponents {:?})", s.d, s.exponents);
    assert_eq!(&(&s.u * &s.d) * &s.v, a);

    let k = a.kernel();
    println!("ker A: {} elements, generators {}", k.order(), k.generators());

    let g = Mat::from_rows(z9, &[vec![4, 3], vec![1, 1]])?;
    println!("inverse of {g} is {}", g.try_inverse()?);
    // invertible exactly when the reduction mod 3 is
    let h = Mat::from_rows(z9, &[vec![3, 1], vec![1, 3]])?;
    println!("{h} invertible: {}", h.is_invertible());
    Ok(())
}
