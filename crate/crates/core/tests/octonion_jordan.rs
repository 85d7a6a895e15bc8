use maxtori::jordan::{JordanElement, JordanInvolution};
use maxtori::octonion::{derivation_algebra, is_automorphism, is_norm_skew, G2Involution, MulTable, Octonion};
use maxtori::sample;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn octonions(seed: u64) -> (Octonion, Octonion) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (sample::octonion(&mut rng), sample::octonion(&mut rng))
}

fn jordan(rng: &mut ChaCha8Rng) -> JordanElement {
    let xi = std::array::from_fn(|_| sample::cyclo(rng));
    let mut x = JordanElement::diagonal(xi);
    for i in 0..3 {
        x = JordanElement::from_kvec(&x.to_kvec().add(&JordanElement::f(i, sample::octonion(rng)).to_kvec()));
    }
    x
}

#[test]
fn g2_involutions_are_automorphisms() {
    let t = MulTable::standard();
    for g in [G2Involution::Gamma, G2Involution::GammaP] {
        assert!(is_automorphism(&g.operator(), t));
    }
}

#[test]
fn derivations_kill_one_and_are_skew() {
    let der = derivation_algebra(MulTable::standard());
    assert_eq!(der.len(), 14);
    for d in &der {
        assert!(d.column(0).is_zero());
        assert!(is_norm_skew(d));
    }
}

#[test]
fn corrupted_table_is_not_alternative() {
    assert!(MulTable::standard().alternativity_defect().is_none());
    assert!(MulTable::corrupted().alternativity_defect().is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative(seed: u64) {
        let t = MulTable::standard();
        let (x, y) = octonions(seed);
        prop_assert_eq!(t.mul(&x, &y).norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn alternative_laws(seed: u64) {
        let t = MulTable::standard();
        let (x, y) = octonions(seed);
        prop_assert_eq!(t.mul(&t.mul(&x, &x), &y), t.mul(&x, &t.mul(&x, &y)));
        prop_assert_eq!(t.mul(&t.mul(&y, &x), &x), t.mul(&y, &t.mul(&x, &x)));
        prop_assert_eq!(t.mul(&x, &y).conj(), t.mul(&y.conj(), &x.conj()));
    }

    #[test]
    fn derivations_satisfy_leibniz(seed: u64, k in 0usize..14) {
        let t = MulTable::standard();
        let d = &derivation_algebra(t)[k];
        let (x, y) = octonions(seed);
        let lhs = Octonion::apply(d, &t.mul(&x, &y));
        let rhs = &t.mul(&Octonion::apply(d, &x), &y) + &t.mul(&x, &Octonion::apply(d, &y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_form_is_associative(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (jordan(&mut rng), jordan(&mut rng), jordan(&mut rng));
        prop_assert_eq!(x.jordan_mul(&y).bilinear(&z), x.bilinear(&y.jordan_mul(&z)));
        prop_assert_eq!(x.jordan_mul(&y), y.jordan_mul(&x));
        prop_assert_eq!(x.cross(&y), y.cross(&x));
        prop_assert_eq!(x.jordan_mul(&y), x.jordan_mul_reference(&y));
    }

    #[test]
    fn involutions_preserve_the_cross_product(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (jordan(&mut rng).to_kvec(), jordan(&mut rng).to_kvec());
        for g in JordanInvolution::LINEAR {
            prop_assert_eq!(g.apply(&g.apply(&x)), x.clone());
            prop_assert_eq!(
                g.apply(&maxtori::jordan::cross(&x, &y)),
                maxtori::jordan::cross(&g.apply(&x), &g.apply(&y))
            );
        }
    }

    #[test]
    fn tau_is_conjugate_linear_and_hermitian(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (jordan(&mut rng), jordan(&mut rng));
        let c = sample::gaussian(&mut rng);
        let cx = JordanElement::from_kvec(&x.to_kvec().scale(&c));
        prop_assert_eq!(cx.tau().to_kvec(), x.tau().to_kvec().scale(&c.tau()));
        prop_assert_eq!(x.hermitian(&y), y.hermitian(&x).tau());
        prop_assert!(x.hermitian(&x).is_real());
        prop_assert_eq!(x.hermitian(&y), x.tau().bilinear(&y));
    }
}
