use coset_lab::stabilizer::proof_identity_suite;
use coset_lab::RingCtx;
use rand::SeedableRng;

fn main() -> coset_lab::Result<()> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for mu in 1..=2 {
        for r in proof_identity_suite(RingCtx::new(3, mu)?, 2, 25, &mut rng) {
            println!("mu={mu} {:<22} {}/{}", r.name, r.passed, r.passed + r.failed);
        }
    }
    Ok(())
}
