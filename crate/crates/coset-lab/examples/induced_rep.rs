//! Ind from the stabilizer of (L, M) in GL(2, Z/3), for each admissible character.

use coset_lab::induced::{all_indicators, bullet_trivial_characters, character_tools, commutant_dimension, induce_for_spec, CosetSpace};
use coset_lab::stabilizer::StabilizerSpec;
use coset_lab::{RingCtx, Submodule};

fn main() -> coset_lab::Result<()> {
    let z3 = RingCtx::new(3, 1)?;
    let l = Submodule::from_vectors(z3, 2, &[vec![1, 0]]);
    let spec = StabilizerSpec::new(l.clone(), l, 2)?;
    let cs = CosetSpace::for_spec(&spec, 100)?;
    println!("{} cosets, |Q| = {}", cs.len(), cs.subgroup.len());
    let inds = all_indicators(&cs, &spec)?;
    for tau in bullet_trivial_characters(&cs, &spec)? {
        let rep = induce_for_spec(&cs, &spec, &tau)?;
        let r = character_tools(&rep);
        println!(
            "τ of order {}: dim {}, <χ,χ> = {:.3}, commutant with indicators {}",
            tau.e,
            rep.dim(),
            r.norm,
            commutant_dimension(&rep, &inds)
        );
    }
    Ok(())
}
