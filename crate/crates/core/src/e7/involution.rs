use std::str::FromStr;

use super::{ETA, PDIM, XI};
use crate::error::AlgebraError;
use crate::jordan::{JordanInvolution, JDIM};
use crate::linalg::{Operator, SparseVec};
use crate::scalar::Cyclo;

/// Transformations of `P^C`: the Jordan involutions acting on both `J^C`
/// blocks and fixing `ξ, η`, and `ι = diag(−i, i, −i, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PInvolution {
    Gamma,
    GammaP,
    Gamma1,
    Sigma,
    SigmaP,
    Iota,
}

impl FromStr for PInvolution {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "gamma" => PInvolution::Gamma,
            "gamma_p" => PInvolution::GammaP,
            "gamma1" => PInvolution::Gamma1,
            "sigma" => PInvolution::Sigma,
            "sigma_p" => PInvolution::SigmaP,
            "iota" => PInvolution::Iota,
            other => return Err(AlgebraError::UnknownName(other.into())),
        })
    }
}

impl PInvolution {
    pub const ALL: [PInvolution; 6] = [
        PInvolution::Gamma,
        PInvolution::GammaP,
        PInvolution::Gamma1,
        PInvolution::Sigma,
        PInvolution::SigmaP,
        PInvolution::Iota,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PInvolution::Iota => "iota",
            other => other.jordan().expect("jordan").name(),
        }
    }

    fn jordan(self) -> Option<JordanInvolution> {
        Some(match self {
            PInvolution::Gamma => JordanInvolution::Gamma,
            PInvolution::GammaP => JordanInvolution::GammaP,
            PInvolution::Gamma1 => JordanInvolution::Gamma1,
            PInvolution::Sigma => JordanInvolution::Sigma,
            PInvolution::SigmaP => JordanInvolution::SigmaP,
            PInvolution::Iota => return None,
        })
    }

    pub fn operator(self) -> Operator {
        match self.jordan() {
            Some(j) => {
                let op = j.operator().expect("linear");
                Operator::of(PDIM, |k| match k {
                    k if k < JDIM => op.column(k).clone(),
                    k if k < 2 * JDIM => op.column(k - JDIM).shift(JDIM),
                    k => SparseVec::unit(k),
                })
            }
            None => {
                let (mi, pi) = (-Cyclo::i(), Cyclo::i());
                let mut d = vec![mi.clone(); JDIM];
                d.extend(vec![pi.clone(); JDIM]);
                d.push(mi);
                d.push(pi);
                Operator::diagonal(&d)
            }
        }
    }

    /// The involutions are their own inverses; `ι⁻¹ = −ι`.
    pub fn inverse(self) -> Operator {
        match self {
            PInvolution::Iota => self.operator().neg(),
            _ => self.operator(),
        }
    }
}

/// `λ(X, Y, ξ, η) = (Y, −X, η, −ξ)`.
pub fn lambda() -> Operator {
    Operator::of(PDIM, |k| match k {
        k if k < JDIM => SparseVec::single(k + JDIM, -Cyclo::one()),
        k if k < 2 * JDIM => SparseVec::unit(k - JDIM),
        XI => SparseVec::single(ETA, -Cyclo::one()),
        _ => SparseVec::unit(XI),
    })
}

/// `λ⁻¹ = −λ`.
pub fn lambda_inverse() -> Operator {
    lambda().neg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e7::PVector;
    use crate::jordan::JordanElement;

    #[test]
    fn lambda_example() {
        let x = JordanElement::e(0).to_kvec();
        let y = JordanElement::e(1).to_kvec();
        let p = PVector::new(x.clone(), y.clone(), Cyclo::from_int(2), Cyclo::from_int(3));
        let img = PVector::from_kvec(&lambda().apply(&p.to_kvec()));
        assert_eq!(img, PVector::new(y, x.neg(), Cyclo::from_int(3), Cyclo::from_int(-2)));
        assert_eq!(lambda().compose(&lambda_inverse()), Operator::identity(PDIM));
    }

    #[test]
    fn inverses() {
        for s in PInvolution::ALL {
            assert_eq!(s.operator().compose(&s.inverse()), Operator::identity(PDIM), "{s:?}");
            assert_eq!(s.name().parse::<PInvolution>().unwrap(), s);
        }
    }
}
