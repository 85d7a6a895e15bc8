use maxtori::f4e6::{is_e6_group, is_f4_group, phi4, phi6, Component, UnitarySample};
use maxtori::jordan::{CpxMatrix, JordanInvolution};
use maxtori::linalg::Operator;
use maxtori::sample;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pair(seed: u64) -> (UnitarySample, UnitarySample) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (UnitarySample::random(&mut rng), UnitarySample::random(&mut rng))
}

fn op(g: JordanInvolution) -> Operator {
    g.operator().expect("linear")
}

fn commutes(a: &Operator, b: &Operator) -> bool {
    a.compose(b) == b.compose(a)
}

#[test]
fn identity_and_omega_map_to_one() {
    let id = Operator::identity(27);
    for c in [UnitarySample::identity(), UnitarySample::omega()] {
        assert_eq!(phi4(&c, Component::Identity), id);
        assert_eq!(phi6(&c, Component::Identity), id);
    }
}

#[test]
fn gamma1_component_is_gamma1() {
    let s = UnitarySample::identity();
    assert_eq!(phi4(&s, Component::Gamma1), op(JordanInvolution::Gamma1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn phi4_is_a_homomorphism_into_f4(seed: u64) {
        let (s, t) = pair(seed);
        let (a, b) = (phi4(&s, Component::Identity), phi4(&t, Component::Identity));
        prop_assert_eq!(phi4(&s.compose(&t), Component::Identity), a.compose(&b));
        prop_assert!(is_f4_group(&a));
    }

    #[test]
    fn phi6_is_a_homomorphism_into_e6(seed: u64) {
        let (s, t) = pair(seed);
        let (a, b) = (phi6(&s, Component::Identity), phi6(&t, Component::Identity));
        prop_assert_eq!(phi6(&s.compose(&t), Component::Identity), a.compose(&b));
        prop_assert!(is_e6_group(&a));
    }

    #[test]
    fn images_commute_with_gamma_and_gamma_p(seed: u64) {
        let (s, _) = pair(seed);
        for g in [JordanInvolution::Gamma, JordanInvolution::GammaP] {
            prop_assert!(commutes(&phi4(&s, Component::Identity), &op(g)));
            prop_assert!(commutes(&phi6(&s, Component::Identity), &op(g)));
        }
    }

    #[test]
    fn diagonal_elements_commute_with_sigma(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (z1, z2) = (sample::unit_phase(&mut rng), sample::unit_phase(&mut rng));
        let a = CpxMatrix::diag([z1.clone(), z2.clone(), (&z1 * &z2).conj()]);
        let b = CpxMatrix::diag([z2.clone(), z1.clone(), (&z1 * &z2).conj()]);
        let p = sample::unit_phase(&mut rng);
        let q = sample::unit_phase(&mut rng);
        let s4 = UnitarySample::diagonal(p.clone(), q.clone(), a.clone()).unwrap();
        let s6 = UnitarySample::new(p, q, a, b).unwrap();
        for g in [JordanInvolution::Sigma, JordanInvolution::SigmaP] {
            prop_assert!(commutes(&phi4(&s4, Component::Identity), &op(g)));
            prop_assert!(commutes(&phi6(&s6, Component::Identity), &op(g)));
        }
    }
}
