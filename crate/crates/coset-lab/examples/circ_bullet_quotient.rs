use coset_lab::stabilizer::{quotient_circ_bullet, StabilizerSpec};
use coset_lab::{Mat, RingCtx};

fn main() -> coset_lab::Result<()> {
    let z9 = RingCtx::new(3, 2)?;
    let b = Mat::from_rows(z9, &[vec![3, 0], vec![0, 0]])?;
    let c = Mat::from_rows(z9, &[vec![3, 0], vec![0, 3]])?;
    let spec = StabilizerSpec::new(b.kernel(), c.transpose().kernel(), 2)?;
    let q = quotient_circ_bullet(&spec, 1 << 13)?;
    println!("|A°| = {}, |A•| = {}, quotient order {}", q.circ.len(), q.bullet.len(), q.order);
    for r in q.reps.iter().take(3) {
        println!("rep {r}");
    }
    Ok(())
}
