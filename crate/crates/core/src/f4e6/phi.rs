use rand::Rng;

use crate::error::AlgebraError;
use crate::jordan::{CpxMatrix, JordanElement, JordanInvolution, SplitElement, JDIM};
use crate::linalg::{Operator, SparseVec};
use crate::octonion::Cpx;
use crate::sample;

/// The two components of `(U(1) × U(1) × SU(3) [× SU(3)]) · Z₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Identity,
    Gamma1,
}

/// Parameters `(p, q, A, B)`; `φ₄` ignores `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitarySample {
    pub p: Cpx,
    pub q: Cpx,
    pub a: CpxMatrix,
    pub b: CpxMatrix,
}

impl UnitarySample {
    /// Checks `p p̄ = q q̄ = 1` with real coefficients, and `A, B ∈ SU(3)`.
    pub fn new(p: Cpx, q: Cpx, a: CpxMatrix, b: CpxMatrix) -> Result<Self, AlgebraError> {
        for (name, z) in [("p", &p), ("q", &q)] {
            if !z.re.is_real() || !z.im.is_real() || !z.norm().is_one() {
                return Err(AlgebraError::NotUnitary(name.into()));
            }
        }
        for (name, m) in [("A", &a), ("B", &b)] {
            let real = m.0.iter().flatten().all(|z| z.re.is_real() && z.im.is_real());
            if !real || !m.is_special_unitary() {
                return Err(AlgebraError::NotUnitary(name.into()));
            }
        }
        Ok(UnitarySample { p, q, a, b })
    }

    /// `(p, q, A, A)`.
    pub fn diagonal(p: Cpx, q: Cpx, a: CpxMatrix) -> Result<Self, AlgebraError> {
        Self::new(p, q, a.clone(), a)
    }

    pub fn identity() -> Self {
        UnitarySample {
            p: Cpx::one(),
            q: Cpx::one(),
            a: CpxMatrix::identity(),
            b: CpxMatrix::identity(),
        }
    }

    /// `(ω₁, ω₁, ω₁E, ω₁E)`.
    pub fn omega() -> Self {
        let w = Cpx::omega1();
        let m = CpxMatrix::identity().scale(&w);
        Self::new(w.clone(), w, m.clone(), m).expect("ω₁ sample")
    }

    /// Componentwise product.
    pub fn compose(&self, other: &Self) -> Self {
        UnitarySample {
            p: &self.p * &other.p,
            q: &self.q * &other.q,
            a: &self.a * &other.a,
            b: &self.b * &other.b,
        }
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        UnitarySample {
            p: sample::unit_phase(rng),
            q: sample::unit_phase(rng),
            a: sample::special_unitary(rng),
            b: sample::special_unitary(rng),
        }
    }
}

/// `D(p, q) = diag(p, q, conj(pq))`.
pub fn d_matrix(p: &Cpx, q: &Cpx) -> CpxMatrix {
    CpxMatrix::diag([p.clone(), q.clone(), (p * q).conj()])
}

fn operator_from_split(f: impl Fn(&SplitElement) -> SplitElement) -> Operator {
    Operator::of(JDIM, |b| {
        let s = SplitElement::from_jordan(&JordanElement::from_kvec(&SparseVec::unit(b)));
        f(&s).to_jordan().to_kvec()
    })
}

fn pre_conjugate(s: &SplitElement, c: Component) -> SplitElement {
    match c {
        Component::Identity => s.clone(),
        Component::Gamma1 => SplitElement {
            x: s.x.conj(),
            m: s.m.conj(),
        },
    }
}

/// `φ₄((p, q, A), 1)(X + M) = AXA* + D(p, q)MA*`; the `γ₁` component
/// conjugates `X` and `M` first.
pub fn phi4(s: &UnitarySample, c: Component) -> Operator {
    let (a, a_star, d) = (&s.a, s.a.star(), d_matrix(&s.p, &s.q));
    operator_from_split(|v| {
        let v = pre_conjugate(v, c);
        SplitElement {
            x: &(a * &v.x) * &a_star,
            m: &(&d * &v.m) * &a_star,
        }
    })
}

/// `φ₆((p, q, A, B), 1)(X + M) = hXh* + D(p, q)M(τh)*` with
/// `h = h(A, B)`; the `γ₁` component conjugates `X` and `M` first.
pub fn phi6(s: &UnitarySample, c: Component) -> Operator {
    let h = CpxMatrix::h(&s.a, &s.b);
    let (h_star, tau_h_star, d) = (h.star(), h.tau().star(), d_matrix(&s.p, &s.q));
    operator_from_split(|v| {
        let v = pre_conjugate(v, c);
        SplitElement {
            x: &(&h * &v.x) * &h_star,
            m: &(&d * &v.m) * &tau_h_star,
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub equal: bool,
    /// First basis index whose images differ.
    pub first_difference: Option<usize>,
}

fn compare(id: &'static str, description: &'static str, lhs: &Operator, rhs: &Operator) -> IdentityCheck {
    let first_difference = lhs.first_difference(rhs);
    IdentityCheck {
        id,
        description,
        equal: first_difference.is_none(),
        first_difference,
    }
}

/// `σ, σ′` as `φ₄` and `φ₆` images of `E_{1,−1}`, `E_{−1,1}`, and the
/// central elements `(ω₁, ω₁, ω₁E[, ω₁E])` mapping to the identity.
pub fn phi_identities() -> Vec<IdentityCheck> {
    let e1m = CpxMatrix::diag_ints([1, -1, -1]);
    let em1 = CpxMatrix::diag_ints([-1, -1, 1]);
    let s1 = UnitarySample::diagonal(Cpx::one(), Cpx::one(), e1m).expect("E_{1,-1}");
    let s2 = UnitarySample::diagonal(Cpx::one(), Cpx::one(), em1).expect("E_{-1,1}");
    let sigma = JordanInvolution::Sigma.operator().expect("linear");
    let sigma_p = JordanInvolution::SigmaP.operator().expect("linear");
    let id = Operator::identity(JDIM);
    let w = UnitarySample::omega();
    vec![
        compare("phi4_sigma", "σ = φ₄((1,1,E_{1,-1}),1)", &sigma, &phi4(&s1, Component::Identity)),
        compare("phi4_sigma_p", "σ' = φ₄((1,1,E_{-1,1}),1)", &sigma_p, &phi4(&s2, Component::Identity)),
        compare("phi6_sigma", "σ = φ₆((1,1,E_{1,-1},E_{1,-1}),1)", &sigma, &phi6(&s1, Component::Identity)),
        compare("phi6_sigma_p", "σ' = φ₆((1,1,E_{-1,1},E_{-1,1}),1)", &sigma_p, &phi6(&s2, Component::Identity)),
        compare("phi4_kernel_omega", "φ₄((ω,ω,ωE),1) = 1", &id, &phi4(&w, Component::Identity)),
        compare("phi6_kernel_omega", "φ₆((ω,ω,ωE,ωE),1) = 1", &id, &phi6(&w, Component::Identity)),
    ]
}

#[cfg(test)]
mod tests {
    use super::super::{is_e6_group, is_f4_group};
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn phi_identities_hold() {
        for c in phi_identities() {
            assert!(c.equal, "{} differs at {:?}", c.id, c.first_difference);
        }
    }

    #[test]
    fn trivial_and_restricted_samples() {
        let id = Operator::identity(JDIM);
        assert_eq!(phi4(&UnitarySample::identity(), Component::Identity), id);
        assert_eq!(phi6(&UnitarySample::identity(), Component::Identity), id);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = UnitarySample::random(&mut rng);
        let diag = UnitarySample { b: s.a.clone(), ..s.clone() };
        assert_eq!(phi6(&diag, Component::Identity), phi4(&s, Component::Identity));
    }

    #[test]
    fn memberships_and_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g1 = JordanInvolution::Gamma1.operator().unwrap();
        let gamma = JordanInvolution::Gamma.operator().unwrap();
        let gamma_p = JordanInvolution::GammaP.operator().unwrap();
        let s = UnitarySample::random(&mut rng);
        let t = UnitarySample::random(&mut rng);
        let p4 = phi4(&s, Component::Identity);
        let p6 = phi6(&s, Component::Identity);
        assert!(is_f4_group(&p4));
        assert!(is_e6_group(&p6));
        assert!(!is_f4_group(&p6));
        for op in [&p4, &p6] {
            assert!(op.commutator(&gamma).is_zero());
            assert!(op.commutator(&gamma_p).is_zero());
        }
        assert_eq!(phi4(&s, Component::Gamma1), p4.compose(&g1));
        assert_eq!(phi6(&s, Component::Gamma1), p6.compose(&g1));
        assert_eq!(phi4(&s.compose(&t), Component::Identity), p4.compose(&phi4(&t, Component::Identity)));
        assert_eq!(phi6(&s.compose(&t), Component::Identity), p6.compose(&phi6(&t, Component::Identity)));
    }

    #[test]
    fn rejects_non_unitary() {
        let bad = UnitarySample::new(Cpx::from_ints(2, 0), Cpx::one(), CpxMatrix::identity(), CpxMatrix::identity());
        assert!(matches!(bad, Err(AlgebraError::NotUnitary(_))));
        let bad = UnitarySample::new(Cpx::one(), Cpx::one(), CpxMatrix::diag_ints([1, 1, -1]), CpxMatrix::identity());
        assert!(bad.is_err());
    }
}
