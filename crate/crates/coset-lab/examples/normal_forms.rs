use coset_lab::idempotent::{nilpotent_unit_normal_form, pair_canonical_form, solve_lemma2, solve_uu, PairMode};
use coset_lab::{Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    let z9 = RingCtx::new(3, 2)?;
    let a = Mat::from_rows(z9, &[vec![3, 1], vec![0, 2]])?;
    let nf = nilpotent_unit_normal_form(&a)?;
    println!("(zeta a zeta^-1)^{} = diag(0, 1_{})  with zeta = {}", nf.n, nf.k, nf.zeta);

    let z27 = RingCtx::new(3, 3)?;
    let m = |x: i64| Mat::from_rows(z27, &[vec![x]]).unwrap();
    let u = solve_uu(&m(1), &m(2), &m(5), &m(7))?;
    println!("uu solution over Z/27: {u}");

    let b = Mat::from_rows(z9, &[vec![3, 1]])?;
    let c = Mat::from_rows(z9, &[vec![1], vec![0]])?;
    let u = solve_lemma2(&b, &c)?;
    println!("lemma-2 u = {u}");

    let pc = pair_canonical_form(&Mat::from_rows(z9, &[vec![3, 0], vec![1, 1]])?, &Mat::from_rows(z9, &[vec![1, 3], vec![0, 0]])?, PairMode::ThreeSided)?;
    println!("three-sided form: B = {}, C = {}, rank {}", pc.b, pc.c, pc.r);
    Ok(())
}
