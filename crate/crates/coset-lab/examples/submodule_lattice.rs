//! Submodules of (Z/9)^2: canonical generators, meets, joins and kernel presentations.

use coset_lab::{Mat, RingCtx, Submodule};

fn main() -> coset_lab::Result<()> {
    let z9 = RingCtx::new(3, 2)?;
    let all = Submodule::enumerate_all(z9, 2);
    println!("(Z/9)^2 has {} submodules", all.len());

    let a = Submodule::from_vectors(z9, 2, &[vec![1, 1]]);
    let b = Submodule::from_vectors(z9, 2, &[vec![1, 4]]);
    let meet = a.intersect(&b)?;
    let join = a.sum(&b)?;
    println!("meet {} order {}", meet.generators(), meet.order());
    println!("join {} order {} invariants {:?}", join.generators(), join.order(), join.invariants());

    let pres = join.as_kernel();
    assert_eq!(pres.kernel(), join);
    println!("join = ker of {pres}");

    let swap = Mat::from_rows(z9, &[vec![0, 1], vec![1, 0]])?;
    println!("a moved by the swap: {}", a.act(&swap)?.generators());
    Ok(())
}
