//! Residues in Z/27: units, valuations and level reduction.

use coset_lab::ring::ArithOp;
use coset_lab::RingCtx;

fn main() -> coset_lab::Result<()> {
    let z27 = RingCtx::new(3, 3)?;
    let a = z27.elem(10);
    let b = z27.elem(18);
    println!("{a} * {b} = {}", a.arith(b, ArithOp::Mul)?);
    println!("1/{a} = {}", a.inv()?);
    println!("v(18) = {}, 18 mod 9 = {}", b.valuation(), b.reduce_level(2)?);
    match b.inv() {
        Err(e) => println!("18 has no inverse: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
