//! X[L, M] for pairs of submodules: products are intersections, the order is inclusion.

use coset_lab::idempotent::{build_x, idempotent_canonical, XIdempotent};
use coset_lab::{Mat, RingCtx, Submodule};

fn main() -> coset_lab::Result<()> {
    let z3 = RingCtx::new(3, 1)?;
    let e1 = Submodule::from_vectors(z3, 2, &[vec![1, 0]]);
    let e2 = Submodule::from_vectors(z3, 2, &[vec![0, 1]]);
    let full = Submodule::full(z3, 2);

    let x = XIdempotent::new(e1.clone(), full.clone())?;
    let y = XIdempotent::new(e2, e1)?;
    let xy = x.product(&y)?;
    println!("L = {}  M = {}", xy.l.generators(), xy.m.generators());
    println!("xy below x: {}, x below xy: {}", xy.precedes(&x)?, x.precedes(&xy)?);

    let composed = x.to_coset().compose(&y.to_coset())?;
    println!("composite class identified through Π: {}", XIdempotent::from_pi(&coset_lab::partial_iso::pi_functor(&composed)) == Some(xy));

    let b = Mat::from_rows(z3, &[vec![1], vec![1]])?;
    let c = Mat::from_rows(z3, &[vec![0, 1]])?;
    let ic = idempotent_canonical(&build_x(&b, &c)?, 1 << 20)?;
    println!("canonical conjugate: beta = {}, gamma = {}", ic.beta, ic.gamma);
    Ok(())
}
