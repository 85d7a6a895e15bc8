use super::{E7Element, PVector};
use crate::jordan::{bilinear, cross, hermitian, identity, jmul, mult_operator, JDIM};
use crate::linalg::{Combiner, KVec, Operator};
use crate::scalar::{Cyclo, Rational};

/// `X ∨ Y = [X̃, Ỹ] + (X∘Y − ⅓(X, Y)E)~`.
pub fn vee(x: &KVec, y: &KVec) -> Operator {
    let (xt, yt) = (mult_operator(x), mult_operator(y));
    let third = bilinear(x, y).scale(&Rational::new(1, 3));
    let z = jmul(x, y).sub(&identity().scale(&third));
    xt.commutator(&yt).add(&mult_operator(&z))
}

/// `{P, Q} = (X, W) − (Z, Y) + ξω − ζη`.
pub fn skew_form(p: &PVector, q: &PVector) -> Cyclo {
    &(&bilinear(&p.x, &q.y) - &bilinear(&q.x, &p.y)) + &(&(&p.xi * &q.eta) - &(&q.xi * &p.eta))
}

/// `⟨P, Q⟩ = ⟨X, Z⟩ + ⟨Y, W⟩ + (τξ)ζ + (τη)ω`.
pub fn p_hermitian(p: &PVector, q: &PVector) -> Cyclo {
    let xy = &hermitian(&p.x, &q.x) + &hermitian(&p.y, &q.y);
    &xy + &(&(&p.xi.tau() * &q.xi) + &(&p.eta.tau() * &q.eta))
}

fn q(n: i64, d: i64) -> Cyclo {
    Cyclo::frac(n, d)
}

/// `P × Q = Φ(φ, A, B, ν)` with
/// `φ = −½(X∨W + Z∨Y)`, `A = −¼(2Y×W − ξZ − ζX)`,
/// `B = ¼(2X×Z − ηW − ωY)`, `ν = ⅛((X,W) + (Z,Y) − 3(ξω + ζη))`.
pub fn cross_pq(p: &PVector, qv: &PVector) -> E7Element {
    let (x, y, xi, eta) = (&p.x, &p.y, &p.xi, &p.eta);
    let (z, w, zeta, omega) = (&qv.x, &qv.y, &qv.xi, &qv.eta);
    let mut phi = Operator::zero(JDIM);
    if !x.is_zero() && !w.is_zero() {
        phi = phi.add(&vee(x, w));
    }
    if !z.is_zero() && !y.is_zero() {
        phi = phi.add(&vee(z, y));
    }
    let phi = phi.scale(&q(-1, 2));

    let mut a = Combiner::new();
    if !y.is_zero() && !w.is_zero() {
        a.add_scaled(&q(-1, 2), &cross(y, w));
    }
    a.add_scaled(&(xi * &q(1, 4)), z);
    a.add_scaled(&(zeta * &q(1, 4)), x);

    let mut b = Combiner::new();
    if !x.is_zero() && !z.is_zero() {
        b.add_scaled(&q(1, 2), &cross(x, z));
    }
    b.add_scaled(&(eta * &q(-1, 4)), w);
    b.add_scaled(&(omega * &q(-1, 4)), y);

    let forms = &bilinear(x, w) + &bilinear(z, y);
    let scalars = &(xi * omega) + &(zeta * eta);
    let nu = &(&forms - &(&scalars * &Cyclo::from_int(3))) * &q(1, 8);
    E7Element::new(phi, a.finish(), b.finish(), nu)
}
