mod common;

use coset_lab::induced::*;
use coset_lab::linalg::general_linear;
use coset_lab::stabilizer::{in_hat, StabilizerSpec};
use coset_lab::{DoubleCoset, Mat, RingCtx, Submodule};
use common::{certified_equivalent, random_coset, rng};
use rand::Rng;

fn z3() -> RingCtx {
    RingCtx::new(3, 1).unwrap()
}

fn specs() -> Vec<StabilizerSpec> {
    let subs = Submodule::enumerate_all(z3(), 2);
    let mut out = Vec::new();
    for l in &subs {
        for m in &subs {
            out.push(StabilizerSpec::new(l.clone(), m.clone(), 2).unwrap());
        }
    }
    out
}

#[test]
fn cocycle_and_homomorphism_exhaustive() {
    for spec in specs().into_iter().step_by(5) {
        let cs = CosetSpace::for_spec(&spec, 100).unwrap();
        assert_eq!(cs.len() * cs.subgroup.len(), 48);
        let hat: Vec<&Mat> = cs.group.iter().filter(|g| in_hat(g, &spec).unwrap()).collect();
        assert_eq!(hat, cs.subgroup.iter().collect::<Vec<_>>());
        for tau in bullet_trivial_characters(&cs, &spec).unwrap() {
            let rep = induce_for_spec(&cs, &spec, &tau).unwrap();
            assert!(rep.cocycle_holds());
            let pairs = (0..48).flat_map(|i| (0..48).map(move |j| (i, j)));
            assert!(rep.homomorphism_holds(pairs));
        }
    }
}

#[test]
fn non_trivial_on_bullet_is_rejected() {
    let l = Submodule::from_vectors(z3(), 2, &[vec![1, 0]]);
    let spec = StabilizerSpec::new(l.clone(), l, 2).unwrap();
    let cs = CosetSpace::for_spec(&spec, 100).unwrap();
    let good = bullet_trivial_characters(&cs, &spec).unwrap();
    let bad = characters_of(&cs.subgroup).into_iter().find(|c| !good.contains(c)).unwrap();
    assert!(matches!(induce_for_spec(&cs, &spec, &bad), Err(coset_lab::Error::NotBulletTrivial)));
}

#[test]
fn indicator_laws_on_all_pairs() {
    let subs = Submodule::enumerate_all(z3(), 2);
    for spec in specs() {
        let cs = CosetSpace::for_spec(&spec, 100).unwrap();
        for k1 in &subs {
            for n1 in &subs {
                let i1 = indicator_operator(&cs, &spec, k1, n1).unwrap();
                for k2 in &subs {
                    for n2 in &subs {
                        let i2 = indicator_operator(&cs, &spec, k2, n2).unwrap();
                        let meet = indicator_operator(&cs, &spec, &k1.intersect(k2).unwrap(), &n1.intersect(n2).unwrap()).unwrap();
                        let prod: Vec<bool> = i1.iter().zip(&i2).map(|(a, b)| *a && *b).collect();
                        assert_eq!(prod, meet);
                    }
                }
            }
        }
    }
}

#[test]
fn swapping_coordinates_moves_the_indicator() {
    let ctx = z3();
    let e1 = Submodule::from_vectors(ctx, 2, &[vec![1, 0]]);
    let e2 = Submodule::from_vectors(ctx, 2, &[vec![0, 1]]);
    let zero = Submodule::zero(ctx, 2);
    let spec = StabilizerSpec::new(e1.clone(), zero.clone(), 2).unwrap();
    let cs = CosetSpace::for_spec(&spec, 100).unwrap();
    let rep = induce_for_spec(&cs, &spec, &Character::trivial(&cs.subgroup)).unwrap();
    let swap = Mat::from_rows(ctx, &[vec![0, 1], vec![1, 0]]).unwrap();
    assert!(equivariance_check(&rep, &spec, &swap, &e1, &zero).unwrap());
    // the transported operator is the one for span{e2}, and differs from the original
    assert_ne!(indicator_operator(&cs, &spec, &e1, &zero).unwrap(), indicator_operator(&cs, &spec, &e2, &zero).unwrap());
    assert_eq!(e1.act(&swap.try_inverse().unwrap()).unwrap(), e2);
}

#[test]
fn equivariance_random_elements() {
    let subs = Submodule::enumerate_all(z3(), 2);
    let group = general_linear(z3(), 2, 100).unwrap();
    let mut r = rng(41);
    for spec in specs() {
        let cs = CosetSpace::for_spec(&spec, 100).unwrap();
        let tau = bullet_trivial_characters(&cs, &spec).unwrap().pop().unwrap();
        let rep = induce_for_spec(&cs, &spec, &tau).unwrap();
        let a = &group[r.gen_range(0..group.len())];
        for k in &subs {
            for n in &subs {
                assert!(equivariance_check(&rep, &spec, a, k, n).unwrap());
            }
        }
    }
}

#[test]
fn norms_agree_with_orbit_count() {
    for spec in specs() {
        let cs = CosetSpace::for_spec(&spec, 100).unwrap();
        let indicators = all_indicators(&cs, &spec).unwrap();
        for tau in bullet_trivial_characters(&cs, &spec).unwrap() {
            let rep = induce_for_spec(&cs, &spec, &tau).unwrap();
            let report = character_tools(&rep);
            assert!(report.integral);
            assert_eq!(report.norm.round() as usize, commutant_dimension(&rep, &[]));
            assert_eq!(commutant_dimension(&rep, &indicators), 1);
        }
    }
}

#[test]
fn stabilization_identity_and_circ() {
    let ctx = z3();
    let id = DoubleCoset::identity(ctx, 1);
    let rep = coset_stabilization_check(&id, &id, 0..=3, 1 << 20).unwrap();
    assert!(rep.constant && rep.matches_compose);

    let mut r = rng(3);
    for _ in 0..20 {
        let g1 = random_coset(ctx, 1, 1, 2, &mut r);
        let g2 = random_coset(ctx, 1, 1, 2, &mut r);
        let j0 = g1.stable_j(&g2);
        let composed = g1.compose(&g2).unwrap();
        for j in [j0, j0 + 2] {
            assert!(certified_equivalent(&g1.literal_product(&g2, j).unwrap(), &composed));
        }
    }
}
