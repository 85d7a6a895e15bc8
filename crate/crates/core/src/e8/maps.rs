use std::str::FromStr;

use super::E8Element;
use crate::e7::{lambda, lambda_inverse, PInvolution, PVector};
use crate::error::AlgebraError;
use crate::linalg::Operator;

/// Maps on `e₈^C`. `σ, σ′, γ, γ′, ι` act by conjugation on `Φ`, directly on
/// `P, Q` and trivially on `r, u, v`;
/// `λ̃(Φ, P, Q, r, u, v) = (λΦλ⁻¹, λQ, −λP, −r, −v, −u)`; `τ` conjugates
/// every component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum E8Map {
    Sigma,
    SigmaP,
    LambdaTilde,
    Tau,
    Gamma,
    GammaP,
    IotaAd,
}

impl FromStr for E8Map {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "sigma" => E8Map::Sigma,
            "sigma_p" => E8Map::SigmaP,
            "lambda_tilde" => E8Map::LambdaTilde,
            "tau" => E8Map::Tau,
            "gamma" => E8Map::Gamma,
            "gamma_p" => E8Map::GammaP,
            "iota_ad" => E8Map::IotaAd,
            other => return Err(AlgebraError::UnknownName(other.into())),
        })
    }
}

fn on_p(s: &Operator, p: &PVector) -> PVector {
    PVector::from_kvec(&s.apply(&p.to_kvec()))
}

fn lifted(x: &E8Element, inv: PInvolution) -> E8Element {
    let (s, s_inv) = (inv.operator(), inv.inverse());
    E8Element {
        phi: x.phi.conjugate_by(&s, &s_inv),
        p: on_p(&s, &x.p),
        q: on_p(&s, &x.q),
        ..x.clone()
    }
}

impl E8Map {
    pub const ALL: [E8Map; 7] = [
        E8Map::Sigma,
        E8Map::SigmaP,
        E8Map::LambdaTilde,
        E8Map::Tau,
        E8Map::Gamma,
        E8Map::GammaP,
        E8Map::IotaAd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            E8Map::Sigma => "sigma",
            E8Map::SigmaP => "sigma_p",
            E8Map::LambdaTilde => "lambda_tilde",
            E8Map::Tau => "tau",
            E8Map::Gamma => "gamma",
            E8Map::GammaP => "gamma_p",
            E8Map::IotaAd => "iota_ad",
        }
    }

    pub fn is_conjugate_linear(self) -> bool {
        self == E8Map::Tau
    }

    pub fn apply(self, x: &E8Element) -> E8Element {
        match self {
            E8Map::Sigma => lifted(x, PInvolution::Sigma),
            E8Map::SigmaP => lifted(x, PInvolution::SigmaP),
            E8Map::Gamma => lifted(x, PInvolution::Gamma),
            E8Map::GammaP => lifted(x, PInvolution::GammaP),
            E8Map::IotaAd => lifted(x, PInvolution::Iota),
            E8Map::LambdaTilde => {
                let l = lambda();
                E8Element {
                    phi: x.phi.conjugate_by(&l, &lambda_inverse()),
                    p: on_p(&l, &x.q),
                    q: on_p(&l, &x.p).neg(),
                    r: -&x.r,
                    u: -&x.v,
                    v: -&x.u,
                }
            }
            E8Map::Tau => E8Element {
                phi: x.phi.tau(),
                p: x.p.tau(),
                q: x.q.tau(),
                r: x.r.tau(),
                u: x.u.tau(),
                v: x.v.tau(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e7::XI;
    use crate::scalar::Cyclo;

    fn sample() -> E8Element {
        let mut x = E8Element::compact_p(PVector::unit(5).add(&PVector::unit(30).scale(&Cyclo::i())));
        x.q = x.q.add(&PVector::unit(XI).scale(&Cyclo::sqrt3()));
        x.r = Cyclo::from_int(2);
        x.u = Cyclo::i();
        x.v = Cyclo::frac(1, 3);
        x
    }

    #[test]
    fn involutive() {
        let x = sample();
        for m in [E8Map::Sigma, E8Map::SigmaP, E8Map::LambdaTilde, E8Map::Tau, E8Map::Gamma, E8Map::GammaP] {
            assert_eq!(m.apply(&m.apply(&x)), x, "{m:?}");
            assert_eq!(m.name().parse::<E8Map>().unwrap(), m);
        }
        assert!("upsilon".parse::<E8Map>().is_err());
    }

    #[test]
    fn sigma_fixes_xi_unit() {
        let x = E8Element::from_pq(PVector::unit(XI), PVector::zero());
        assert_eq!(E8Map::Sigma.apply(&x), x);
    }

    #[test]
    fn tau_commutes_with_lambda_tilde() {
        let x = sample();
        let a = E8Map::Tau.apply(&E8Map::LambdaTilde.apply(&x));
        let b = E8Map::LambdaTilde.apply(&E8Map::Tau.apply(&x));
        assert_eq!(a, b);
    }
}
