use coset_lab::idempotent::x_matrix;
use coset_lab::stabilizer::{membership, StabilizerSpec, Tier};
use coset_lab::{Mat, RingCtx, Submodule};

fn main() -> coset_lab::Result<()> {
    let z3 = RingCtx::new(3, 1)?;
    let l = Submodule::from_vectors(z3, 2, &[vec![1, 0]]);
    let spec = StabilizerSpec::new(l.clone(), l, 2)?;
    let x = x_matrix(&spec.b, &spec.c)?;
    let spec = StabilizerSpec { n: x.rows(), ..spec };
    let scale = Mat::from_rows(z3, &[vec![2, 0], vec![0, 1]])?.direct_sum(&Mat::identity(z3, x.rows() - 2));
    let mut shear = Mat::identity(z3, x.rows());
    shear.set(1, 0, 1);

    for (name, g) in [("X(b, c)", &x), ("diag(2, 1, ..)", &scale), ("shear", &shear)] {
        print!("{name}:");
        for tier in [Tier::Hat, Tier::Circ, Tier::Bullet] {
            let (member, witness) = membership(g, &spec, tier)?;
            print!(" {tier:?}={member}");
            if let (Some(w), Tier::Bullet) = (witness, tier) {
                print!(" (u = {})", w.u.expect("bullet witness"));
            }
        }
        println!();
    }
    Ok(())
}
