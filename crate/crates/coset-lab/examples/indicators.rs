use coset_lab::induced::{equivariance_check, indicator_operator, induce_for_spec, Character, CosetSpace};
use coset_lab::stabilizer::StabilizerSpec;
use coset_lab::{Mat, RingCtx, Submodule};

fn main() -> coset_lab::Result<()> {
    let z3 = RingCtx::new(3, 1)?;
    let e1 = Submodule::from_vectors(z3, 2, &[vec![1, 0]]);
    let zero = Submodule::zero(z3, 2);
    let spec = StabilizerSpec::new(e1.clone(), zero.clone(), 2)?;
    let cs = CosetSpace::for_spec(&spec, 100)?;
    let rep = induce_for_spec(&cs, &spec, &Character::trivial(&cs.subgroup))?;

    let show = |d: Vec<bool>| d.iter().map(|&b| if b { '1' } else { '.' }).collect::<String>();
    println!("I(e1, 0)   {}", show(indicator_operator(&cs, &spec, &e1, &zero)?));
    let e2 = Submodule::from_vectors(z3, 2, &[vec![0, 1]]);
    println!("I(e2, 0)   {}", show(indicator_operator(&cs, &spec, &e2, &zero)?));
    let full = Submodule::full(z3, 2);
    println!("I(full, 0) {}", show(indicator_operator(&cs, &spec, &full, &zero)?));

    let swap = Mat::from_rows(z3, &[vec![0, 1], vec![1, 0]])?;
    println!("swap transports I(e1, 0) to I(e2, 0): {}", equivariance_check(&rep, &spec, &swap, &e1, &zero)?);
    Ok(())
}
