use rayon::prelude::*;

use super::{cross_pq, lambda, lambda_inverse, p_hermitian, E7Element, PInvolution, PVector, E7_COORDS, PDIM};
use crate::error::AlgebraError;
use crate::jordan::{transpose, JDIM};
use crate::lie::{fixed_subalgebra, FixedSubalgebra, LieModel, Symmetry};
use crate::linalg::{KVec, Operator, SparseVec};
use crate::scalar::Cyclo;

/// `e₇` as coordinate vectors `(φ, A, B, ν)` with the probe bracket.
#[derive(Debug, Clone, Copy, Default)]
pub struct E7Model;

impl LieModel for E7Model {
    type Elem = E7Element;

    fn coord_len(&self) -> usize {
        E7_COORDS
    }

    fn coords(&self, x: &E7Element) -> KVec {
        x.coords()
    }

    fn from_coords(&self, v: &KVec) -> E7Element {
        E7Element::from_coords(v)
    }

    fn bracket(&self, x: &E7Element, y: &E7Element) -> E7Element {
        x.bracket(y)
    }
}

fn pairs() -> Vec<(usize, usize)> {
    (0..PDIM).flat_map(|a| (a..PDIM).map(move |b| (a, b))).collect()
}

/// The 133 real generators of the compact `e₇`: `Φ(φ, 0, 0, 0)` for `φ` in
/// the given `e₆` basis, `Φ(0, A, −τA, 0)` for `A ∈ {E_k, iE_k}`, and
/// `Φ(0, 0, 0, i)`.
pub fn compute_e7_basis(e6: &[Operator]) -> Vec<E7Element> {
    let mut out: Vec<E7Element> = e6.iter().cloned().map(E7Element::from_phi).collect();
    for unit in [Cyclo::one(), Cyclo::i()] {
        for k in 0..JDIM {
            let a = SparseVec::single(k, unit.clone());
            let b = a.tau().neg();
            out.push(E7Element::new(Operator::zero(JDIM), a, b, Cyclo::zero()));
        }
    }
    out.push(E7Element::new(Operator::zero(JDIM), KVec::new(), KVec::new(), Cyclo::i()));
    out
}

/// All `{P_a × P_b}` as operators on `P^C`, for basis pairs `a ≤ b`.
pub fn cross_operator_table() -> Vec<((usize, usize), Operator)> {
    pairs()
        .into_par_iter()
        .map(|(a, b)| ((a, b), cross_pq(&PVector::unit(a), &PVector::unit(b)).operator()))
        .collect()
}

/// For each element, the first basis pair `(a, b)` at which
/// `[Φ, P×Q] = ΦP×Q + P×ΦQ` or `⟨ΦP, Q⟩ + ⟨P, ΦQ⟩ = 0` fails.
pub fn e7_algebra_defect(elems: &[E7Element]) -> Vec<Option<(usize, usize)>> {
    let ops: Vec<Operator> = elems.par_iter().map(E7Element::operator).collect();
    let failures: Vec<Vec<bool>> = pairs()
        .into_par_iter()
        .map(|(a, b)| {
            let (pa, pb) = (PVector::unit(a), PVector::unit(b));
            let c = cross_pq(&pa, &pb).operator();
            ops.iter()
                .map(|o| {
                    let (oa, ob) = (PVector::from_kvec(o.column(a)), PVector::from_kvec(o.column(b)));
                    if !(&p_hermitian(&oa, &pb) + &p_hermitian(&pa, &ob)).is_zero() {
                        return true;
                    }
                    let rhs = cross_pq(&oa, &pb).add(&cross_pq(&pa, &ob)).operator();
                    o.commutator(&c) != rhs
                })
                .collect()
        })
        .collect();
    let all = pairs();
    (0..elems.len())
        .map(|e| failures.iter().position(|f| f[e]).map(|k| all[k]))
        .collect()
}

pub fn is_e7_algebra(phi: &E7Element) -> bool {
    e7_algebra_defect(std::slice::from_ref(phi))[0].is_none()
}

/// `α(P×Q)α⁻¹ = αP×αQ` and `⟨αP, αQ⟩ = ⟨P, Q⟩` on all basis pairs.
pub fn is_e7_group(alpha: &Operator, alpha_inv: &Operator) -> bool {
    pairs().into_par_iter().all(|(a, b)| {
        let (pa, pb) = (PVector::unit(a), PVector::unit(b));
        let (qa, qb) = (PVector::from_kvec(alpha.column(a)), PVector::from_kvec(alpha.column(b)));
        if p_hermitian(&qa, &qb) != p_hermitian(&pa, &pb) {
            return false;
        }
        let lhs = cross_pq(&pa, &pb).operator().conjugate_by(alpha, alpha_inv);
        lhs == cross_pq(&qa, &qb).operator()
    })
}

/// `λΦλ⁻¹ = Φ(−ᵗφ, −B, −A, −ν)`.
pub fn lambda_twist_holds(phi: &E7Element) -> bool {
    let lhs = phi.operator().conjugate_by(&lambda(), &lambda_inverse());
    let twisted = E7Element::new(transpose(&phi.phi).neg(), phi.b.neg(), phi.a.neg(), -&phi.nu);
    lhs == twisted.operator()
}

const TORUS_INVOLUTIONS: [PInvolution; 5] = [
    PInvolution::Gamma,
    PInvolution::GammaP,
    PInvolution::Sigma,
    PInvolution::SigmaP,
    PInvolution::Iota,
];

/// `Ad(s)` on `e₇` for involutions of `P^C`.
pub fn p_symmetries(names: &[PInvolution]) -> Vec<Symmetry<'static, E7Element>> {
    names
        .iter()
        .map(|n| {
            let (s, s_inv) = (n.operator(), n.inverse());
            Symmetry::new(n.name(), move |x: &E7Element| x.conjugate_by(&s, &s_inv))
        })
        .collect()
}

/// The subalgebra of `e₇` fixed by `γ, γ′, σ, σ′, ι`.
pub fn e7_torus(basis: &[E7Element]) -> Result<FixedSubalgebra<E7Element>, AlgebraError> {
    fixed_subalgebra(&E7Model, basis, &p_symmetries(&TORUS_INVOLUTIONS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f4e6::compute_e6_basis;
    use crate::lie::{closure_rank, real_rank};
    use std::time::Instant;

    #[test]
    fn e7_structure() {
        let t = Instant::now();
        let basis = compute_e7_basis(&compute_e6_basis());
        assert_eq!(basis.len(), 133);
        assert_eq!(real_rank(&E7Model, &basis), 133);
        assert!(basis.iter().all(E7Element::is_compact));
        assert!(basis.iter().all(lambda_twist_holds));
        eprintln!("setup {:?}", t.elapsed());
        for x in basis.iter().step_by(17) {
            for y in basis.iter().step_by(23) {
                let checked = x.bracket_checked(y).unwrap();
                assert_eq!(x.bracket(y), checked);
            }
        }
        eprintln!("brackets {:?}", t.elapsed());
        let defects = e7_algebra_defect(&basis);
        eprintln!("membership {:?}", t.elapsed());
        for (k, d) in defects.iter().enumerate() {
            assert!(d.is_none(), "basis element {k} fails at {d:?}");
        }
        assert_eq!(closure_rank(&E7Model, &basis), 133);
        eprintln!("closure {:?}", t.elapsed());
        let torus = e7_torus(&basis).unwrap();
        eprintln!("torus {:?}", t.elapsed());
        assert_eq!((torus.dimension, torus.abelian, torus.self_centralizing), (7, true, true));
        assert!(torus.pointwise_fixed);
    }

    #[test]
    fn involutions_in_e7() {
        for s in PInvolution::ALL {
            assert!(is_e7_group(&s.operator(), &s.inverse()), "{s:?}");
        }
        assert!(is_e7_group(&lambda(), &lambda_inverse()));
        assert!(!is_e7_group(&Operator::scalar(PDIM, &Cyclo::from_int(2)), &Operator::scalar(PDIM, &Cyclo::frac(1, 2))));
    }
}
