use maxtori::e7::{
    compute_e7_basis, cross_pq, is_e7_group, lambda, p_hermitian, skew_form, e7_torus, vee, E7Element, E7Model,
    PInvolution, PVector, PDIM, XI,
};
use maxtori::f4e6::compute_e6_basis;
use maxtori::jordan::{self, JordanElement, JordanInvolution};
use maxtori::lie::real_coordinates;
use maxtori::linalg::{KVec, Operator};
use maxtori::sample;
use maxtori::scalar::Cyclo;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn e() -> KVec {
    jordan::identity()
}

fn unit_e(i: usize) -> KVec {
    JordanElement::e(i).to_kvec()
}

fn p_sample(rng: &mut ChaCha8Rng) -> PVector {
    let j = |rng: &mut ChaCha8Rng| {
        let xi = std::array::from_fn(|_| sample::cyclo(rng));
        let mut x = JordanElement::diagonal(xi).to_kvec();
        for i in 0..3 {
            x = x.add(&JordanElement::f(i, sample::octonion(rng)).to_kvec());
        }
        x
    };
    PVector::new(j(rng), j(rng), sample::cyclo(rng), sample::cyclo(rng))
}

#[test]
fn action_on_scalar_slots() {
    let a = unit_e(0).add(&JordanElement::f(1, maxtori::octonion::Octonion::unit(3)).to_kvec());
    let phi = E7Element::new(Operator::zero(27), a.clone(), KVec::new(), Cyclo::zero());
    let eta = PVector::new(KVec::new(), KVec::new(), Cyclo::zero(), Cyclo::one());
    assert_eq!(phi.apply(&eta), PVector::new(a.clone(), KVec::new(), Cyclo::zero(), Cyclo::zero()));
    let phi = E7Element::new(Operator::zero(27), KVec::new(), a.clone(), Cyclo::zero());
    let xi = PVector::new(KVec::new(), KVec::new(), Cyclo::one(), Cyclo::zero());
    assert_eq!(phi.apply(&xi), PVector::new(KVec::new(), a, Cyclo::zero(), Cyclo::zero()));
}

#[test]
fn vee_examples() {
    assert!(vee(&e(), &e()).apply(&e()).is_zero());
    assert!(vee(&unit_e(0), &unit_e(1)).apply(&unit_e(2)).is_zero());
}

#[test]
fn form_examples() {
    let xi = PVector::new(KVec::new(), KVec::new(), Cyclo::one(), Cyclo::zero());
    let eta = PVector::new(KVec::new(), KVec::new(), Cyclo::zero(), Cyclo::one());
    assert_eq!(skew_form(&xi, &eta), Cyclo::one());
    let p = PVector::new(e(), KVec::new(), Cyclo::i(), Cyclo::zero());
    assert_eq!(p_hermitian(&p, &p), Cyclo::from_int(4));
    assert!(cross_pq(&xi, &xi).is_zero());
}

#[test]
fn scaling_xi_alone_is_not_in_e7() {
    let mut d = vec![Cyclo::one(); PDIM];
    d[XI] = Cyclo::from_int(2);
    let alpha = Operator::diagonal(&d);
    d[XI] = Cyclo::frac(1, 2);
    assert!(!is_e7_group(&alpha, &Operator::diagonal(&d)));
}

#[test]
fn iota_squares_to_minus_one_and_commutes() {
    let iota = PInvolution::Iota.operator();
    assert_eq!(iota.compose(&iota), Operator::identity(PDIM).neg());
    for s in PInvolution::ALL {
        for t in PInvolution::ALL {
            let (a, b) = (s.operator(), t.operator());
            assert_eq!(a.compose(&b), b.compose(&a), "{} {}", s.name(), t.name());
        }
        assert!(is_e7_group(&s.operator(), &s.inverse()), "{}", s.name());
    }
}

#[test]
fn e6_lift_commutes_with_gamma_iff_phi_does() {
    let e6 = compute_e6_basis();
    let g = JordanInvolution::Gamma.operator().unwrap();
    let pg = PInvolution::Gamma.operator();
    let mut seen = [false; 2];
    for phi in &e6 {
        let fixed = phi.conjugate_by(&g, &g) == *phi;
        let lift = E7Element::from_phi(phi.clone());
        assert_eq!(lift.conjugate_by(&pg, &pg) == lift, fixed);
        seen[fixed as usize] = true;
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn torus_contains_the_nu_direction() {
    let basis = compute_e7_basis(&compute_e6_basis());
    let t = e7_torus(&basis).unwrap();
    assert_eq!(t.dimension, 7);
    assert!(t.abelian && t.self_centralizing);
    let nu = E7Element::new(Operator::zero(27), KVec::new(), KVec::new(), Cyclo::i());
    assert!(real_coordinates(&E7Model, &t.basis, &nu).is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cross_is_symmetric_and_forms_are_compatible(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, q) = (p_sample(&mut rng), p_sample(&mut rng));
        prop_assert_eq!(cross_pq(&p, &q), cross_pq(&q, &p));
        prop_assert_eq!(skew_form(&p, &q), -skew_form(&q, &p));
        prop_assert_eq!(p_hermitian(&p, &q), p_hermitian(&q, &p).tau());
        prop_assert_eq!(p_hermitian(&p, &q), skew_form(&lambda().apply_p(&p).tau(), &q));
    }
}

trait ApplyP {
    fn apply_p(&self, p: &PVector) -> PVector;
}

impl ApplyP for Operator {
    fn apply_p(&self, p: &PVector) -> PVector {
        PVector::from_kvec(&self.apply(&p.to_kvec()))
    }
}
