use std::str::FromStr;

use super::split::{CpxMatrix, SplitElement};
use super::{JordanElement, JDIM};
use crate::error::AlgebraError;
use crate::linalg::{KVec, Operator, SparseVec};

/// The transformations `γ, γ′, γ₁, σ, σ′` of `J^C` and the conjugation `τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JordanInvolution {
    Gamma,
    GammaP,
    Gamma1,
    Sigma,
    SigmaP,
    Tau,
}

impl FromStr for JordanInvolution {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "gamma" => JordanInvolution::Gamma,
            "gamma_p" => JordanInvolution::GammaP,
            "gamma1" => JordanInvolution::Gamma1,
            "sigma" => JordanInvolution::Sigma,
            "sigma_p" => JordanInvolution::SigmaP,
            "tau" => JordanInvolution::Tau,
            other => return Err(AlgebraError::UnknownName(other.into())),
        })
    }
}

impl JordanInvolution {
    pub const LINEAR: [JordanInvolution; 5] = [
        JordanInvolution::Gamma,
        JordanInvolution::GammaP,
        JordanInvolution::Gamma1,
        JordanInvolution::Sigma,
        JordanInvolution::SigmaP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            JordanInvolution::Gamma => "gamma",
            JordanInvolution::GammaP => "gamma_p",
            JordanInvolution::Gamma1 => "gamma1",
            JordanInvolution::Sigma => "sigma",
            JordanInvolution::SigmaP => "sigma_p",
            JordanInvolution::Tau => "tau",
        }
    }

    /// The defining formula on `X + M`.
    pub fn on_split(self, s: &SplitElement) -> SplitElement {
        let d = CpxMatrix::diag_ints;
        let conjugate = |a: &CpxMatrix| &(a * &s.x) * a;
        match self {
            JordanInvolution::Gamma => SplitElement {
                x: s.x.clone(),
                m: &d([1, -1, -1]) * &s.m,
            },
            JordanInvolution::GammaP => SplitElement {
                x: s.x.clone(),
                m: &d([-1, 1, -1]) * &s.m,
            },
            JordanInvolution::Gamma1 => SplitElement {
                x: s.x.conj(),
                m: s.m.conj(),
            },
            JordanInvolution::Sigma => SplitElement {
                x: conjugate(&d([1, -1, -1])),
                m: &s.m * &d([1, -1, -1]),
            },
            JordanInvolution::SigmaP => SplitElement {
                x: conjugate(&d([-1, -1, 1])),
                m: &s.m * &d([-1, -1, 1]),
            },
            JordanInvolution::Tau => SplitElement {
                x: s.x.tau(),
                m: s.m.tau(),
            },
        }
    }

    pub fn apply(self, x: &KVec) -> KVec {
        if self == JordanInvolution::Tau {
            return x.tau();
        }
        let j = JordanElement::from_kvec(x);
        self.on_split(&SplitElement::from_jordan(&j)).to_jordan().to_kvec()
    }

    pub fn is_conjugate_linear(self) -> bool {
        self == JordanInvolution::Tau
    }

    /// The matrix on the basis of `J^C`; `None` for the conjugate-linear `τ`.
    pub fn operator(self) -> Option<Operator> {
        if self.is_conjugate_linear() {
            return None;
        }
        Some(Operator::of(JDIM, |b| self.apply(&SparseVec::unit(b))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclo;

    #[test]
    fn diagonal_sign_patterns() {
        let sigma = JordanInvolution::Sigma.operator().unwrap();
        let fixed = (0..JDIM).filter(|&b| sigma.entry(b, b) == Cyclo::one()).count();
        assert_eq!(fixed, 11);
        // σ negates the x₃ slot
        assert_eq!(sigma.entry(super::super::x_index(2, 5), super::super::x_index(2, 5)), -Cyclo::one());
        for inv in JordanInvolution::LINEAR {
            let op = inv.operator().unwrap();
            for b in 0..JDIM {
                let col = op.column(b);
                assert_eq!(col.nnz(), 1);
                assert_eq!(col.leading().unwrap().0, b);
            }
        }
    }

    #[test]
    fn squares_and_commutation() {
        let ops: Vec<Operator> = JordanInvolution::LINEAR.iter().map(|i| i.operator().unwrap()).collect();
        for a in &ops {
            assert_eq!(a.compose(a), Operator::identity(JDIM));
            for b in &ops {
                assert!(a.commutator(b).is_zero());
            }
        }
    }

    #[test]
    fn tau_is_conjugate_linear_and_commutes() {
        let x = SparseVec::from_dense(&[Cyclo::i(), Cyclo::one(), Cyclo::zero(), Cyclo::from_int(2)]);
        let ix = x.scale(&Cyclo::i());
        let tau = JordanInvolution::Tau;
        assert_eq!(tau.apply(&ix), tau.apply(&x).scale(&-Cyclo::i()));
        for inv in [JordanInvolution::Gamma, JordanInvolution::GammaP, JordanInvolution::Sigma, JordanInvolution::SigmaP] {
            assert_eq!(tau.apply(&inv.apply(&x)), inv.apply(&tau.apply(&x)));
        }
    }
}
