use maxtori::linalg::MatrixQ;
use maxtori::scalar::{Cyclo, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn cyclo() -> impl Strategy<Value = Cyclo> {
    prop::array::uniform4(rational()).prop_map(Cyclo::from_coords)
}

fn matrix() -> impl Strategy<Value = MatrixQ> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((-3i64..=3).prop_map(Rational::from_int), c), r)
            .prop_map(|rows| MatrixQ::from_rows(rows).unwrap())
    })
}

#[test]
fn named_constants() {
    let (i, s, w) = (Cyclo::i(), Cyclo::sqrt3(), Cyclo::omega());
    assert_eq!(&i * &i, Cyclo::from_int(-1));
    assert_eq!(&s * &s, Cyclo::from_int(3));
    assert!(s.is_real());
    assert!(!i.is_real());
    assert_eq!(&(&w * &w) * &w, Cyclo::one());
    assert_eq!(i.tau(), -&i);
}

#[test]
fn big_rationals_stay_exact() {
    let mut x = Rational::new(1, 3);
    for _ in 0..8 {
        x = &x * &x;
    }
    // (1/3)^256 overflows any machine word
    let mut y = x.clone();
    for _ in 0..256 {
        y = &y * &Rational::from_int(3);
    }
    assert!(y.is_one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Cyclo::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Cyclo::one());
        }
    }

    #[test]
    fn tau_is_an_involutive_automorphism(a in cyclo(), b in cyclo()) {
        prop_assert_eq!(a.tau().tau(), a.clone());
        prop_assert_eq!((&a * &b).tau(), &a.tau() * &b.tau());
        prop_assert_eq!((&a + &b).tau(), &a.tau() + &b.tau());
        prop_assert!((&a * &a.tau()).is_real());
        prop_assert!(a.re().is_real() && a.im().is_real());
        prop_assert_eq!(&a.re() + &(&Cyclo::i() * &a.im()), a);
    }

    #[test]
    fn rational_arithmetic(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        prop_assert_eq!((&a * &b).signum(), a.signum() * b.signum());
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.ncols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
        }
        prop_assert_eq!(m.kernel_basis(), kernel);
    }
}
