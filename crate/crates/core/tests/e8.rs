use std::sync::OnceLock;

use maxtori::e7::compute_e7_basis;
use maxtori::e8::{compute_e8_basis, E8Element, E8Map};
use maxtori::f4e6::compute_e6_basis;
use maxtori::scalar::Cyclo;
use proptest::prelude::*;

fn basis() -> &'static [E8Element] {
    static B: OnceLock<Vec<E8Element>> = OnceLock::new();
    B.get_or_init(|| compute_e8_basis(&compute_e7_basis(&compute_e6_basis())))
}

/// A real combination of up to three basis elements with small integer
/// coefficients.
fn element() -> impl Strategy<Value = E8Element> {
    prop::collection::vec((0usize..248, -3i64..=3), 1..=3).prop_map(|terms| {
        terms.iter().fold(E8Element::zero(), |acc, (k, c)| acc.add(&basis()[*k].scale(&Cyclo::from_int(*c))))
    })
}

fn jacobi(x: &E8Element, y: &E8Element, z: &E8Element) -> E8Element {
    x.bracket(&y.bracket(z)).add(&y.bracket(&z.bracket(x))).add(&z.bracket(&x.bracket(y)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compact_form_is_a_real_subalgebra(x in element(), y in element(), c in -5i64..=5) {
        prop_assert!(x.is_compact());
        prop_assert!(x.add(&y.scale(&Cyclo::from_int(c))).is_compact());
        prop_assert!(x.bracket(&y).is_compact());
        prop_assert!(!x.scale(&Cyclo::i()).is_compact() || x.is_zero());
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(x in element(), y in element(), z in element(), c in -4i64..=4) {
        let c = Cyclo::from_int(c);
        prop_assert_eq!(x.bracket(&y).add(&y.bracket(&x)), E8Element::zero());
        prop_assert_eq!(x.add(&y.scale(&c)).bracket(&z), x.bracket(&z).add(&y.bracket(&z).scale(&c)));
    }

    #[test]
    fn jacobi_on_combinations(x in element(), y in element(), z in element()) {
        prop_assert!(jacobi(&x, &y, &z).is_zero());
    }

    #[test]
    fn sigma_maps_are_automorphisms(x in element(), y in element()) {
        for m in [E8Map::Sigma, E8Map::SigmaP, E8Map::LambdaTilde] {
            prop_assert_eq!(m.apply(&x.bracket(&y)), m.apply(&x).bracket(&m.apply(&y)));
        }
    }
}
