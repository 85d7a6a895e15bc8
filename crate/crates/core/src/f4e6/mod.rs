//! `F₄` and `E₆` at group and Lie-algebra level on `J^C`: membership tests,
//! exact bases of `f₄` and `e₆`, the maps `φ₄`, `φ₆`, and their fixed tori.

mod basis;
mod phi;

pub use basis::{compute_e6_basis, compute_f4_basis, e6_complement};
pub use phi::{d_matrix, phi4, phi6, phi_identities, Component, IdentityCheck, UnitarySample};

use crate::error::AlgebraError;
use crate::jordan::{basis_cross, cross, hermitian, JordanInvolution, JDIM};
use crate::lie::{fixed_subalgebra, FixedSubalgebra, OperatorAlgebra, Symmetry};
use crate::linalg::{Operator, SparseVec};

/// First basis pair `(a, b)` with `α(e_a × e_b) ≠ αe_a × αe_b`.
pub fn f4_group_defect(alpha: &Operator) -> Option<(usize, usize)> {
    pairs().find(|&(a, b)| alpha.apply(basis_cross(a, b)) != cross(alpha.column(a), alpha.column(b)))
}

/// `α(X × Y) = αX × αY` on all basis pairs.
pub fn is_f4_group(alpha: &Operator) -> bool {
    f4_group_defect(alpha).is_none()
}

/// `δ(X × Y) = δX × Y + X × δY` on all basis pairs.
pub fn is_f4_algebra(delta: &Operator) -> bool {
    pairs().all(|(a, b)| {
        let lhs = delta.apply(basis_cross(a, b));
        let rhs = cross(delta.column(a), &SparseVec::unit(b)).add(&cross(&SparseVec::unit(a), delta.column(b)));
        lhs == rhs
    })
}

/// `αX × αY = τατ(X × Y)` and `⟨αX, αY⟩ = ⟨X, Y⟩` on all basis pairs.
pub fn is_e6_group(alpha: &Operator) -> bool {
    let conj = alpha.tau();
    pairs().all(|(a, b)| {
        let (xa, xb) = (alpha.column(a), alpha.column(b));
        cross(xa, xb) == conj.apply(basis_cross(a, b))
            && hermitian(xa, xb) == hermitian(&SparseVec::unit(a), &SparseVec::unit(b))
    })
}

/// `φX × Y + X × φY = τφτ(X × Y)` and `⟨φX, Y⟩ + ⟨X, φY⟩ = 0` on all
/// basis pairs.
pub fn is_e6_algebra(phi: &Operator) -> bool {
    let conj = phi.tau();
    pairs().all(|(a, b)| {
        let (ea, eb) = (SparseVec::unit(a), SparseVec::unit(b));
        let lhs = cross(phi.column(a), &eb).add(&cross(&ea, phi.column(b)));
        if lhs != conj.apply(basis_cross(a, b)) {
            return false;
        }
        (&hermitian(phi.column(a), &eb) + &hermitian(&ea, phi.column(b))).is_zero()
    })
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..JDIM).flat_map(|a| (a..JDIM).map(move |b| (a, b)))
}

/// `Ad(s)` for the given involutions of `J^C`.
pub fn jordan_symmetries(names: &[JordanInvolution]) -> Vec<Symmetry<'static, Operator>> {
    names
        .iter()
        .map(|n| {
            let s = n.operator().expect("linear involution");
            Symmetry::conjugation(n.name(), s.clone(), s)
        })
        .collect()
}

const TORUS_INVOLUTIONS: [JordanInvolution; 4] = [
    JordanInvolution::Gamma,
    JordanInvolution::GammaP,
    JordanInvolution::Sigma,
    JordanInvolution::SigmaP,
];

/// The subalgebra of `f₄` (or `e₆`) fixed by `γ, γ′, σ, σ′`.
pub fn torus_in(basis: &[Operator]) -> Result<FixedSubalgebra<Operator>, AlgebraError> {
    fixed_subalgebra(
        &OperatorAlgebra { dim: JDIM },
        basis,
        &jordan_symmetries(&TORUS_INVOLUTIONS),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclo;

    #[test]
    fn involutions_are_in_f4_and_e6() {
        for inv in JordanInvolution::LINEAR {
            let op = inv.operator().unwrap();
            assert!(is_f4_group(&op), "{inv:?}");
            assert!(is_e6_group(&op), "{inv:?}");
        }
        assert!(is_f4_group(&Operator::identity(JDIM)));
        let mut signs = vec![Cyclo::one(); JDIM];
        signs[0] = -Cyclo::one();
        assert!(!is_f4_group(&Operator::diagonal(&signs)));
    }
}
