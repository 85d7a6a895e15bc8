use crate::e7::{cross_pq, lambda, skew_form, E7Element, PVector, E7_COORDS, PDIM};
use crate::linalg::{KVec, SparseVec};
use crate::scalar::Cyclo;

/// Length of the coordinate vector `(Φ, P, Q, r, u, v)`.
pub const E8_COORDS: usize = E7_COORDS + 2 * PDIM + 3;
const P_OFF: usize = E7_COORDS;
const Q_OFF: usize = P_OFF + PDIM;
const R: usize = Q_OFF + PDIM;

/// `R = (Φ, P, Q, r, u, v) ∈ e₈^C = e₇^C ⊕ P^C ⊕ P^C ⊕ C ⊕ C ⊕ C`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct E8Element {
    pub phi: E7Element,
    pub p: PVector,
    pub q: PVector,
    pub r: Cyclo,
    pub u: Cyclo,
    pub v: Cyclo,
}

fn frac(n: i64, d: i64) -> Cyclo {
    Cyclo::frac(n, d)
}

impl E8Element {
    pub fn zero() -> Self {
        E8Element {
            phi: E7Element::zero(),
            p: PVector::zero(),
            q: PVector::zero(),
            r: Cyclo::zero(),
            u: Cyclo::zero(),
            v: Cyclo::zero(),
        }
    }

    pub fn from_phi(phi: E7Element) -> Self {
        E8Element { phi, ..Self::zero() }
    }

    pub fn from_pq(p: PVector, q: PVector) -> Self {
        E8Element { p, q, ..Self::zero() }
    }

    pub fn from_scalars(r: Cyclo, u: Cyclo, v: Cyclo) -> Self {
        E8Element { r, u, v, ..Self::zero() }
    }

    /// `(0, P, −τλP, 0, 0, 0)`.
    pub fn compact_p(p: PVector) -> Self {
        let q = compact_partner(&p);
        Self::from_pq(p, q)
    }

    pub fn coords(&self) -> KVec {
        let s = SparseVec::from_dense(&[self.r.clone(), self.u.clone(), self.v.clone()]);
        SparseVec::concat(&[
            (0, &self.phi.coords()),
            (P_OFF, &self.p.to_kvec()),
            (Q_OFF, &self.q.to_kvec()),
            (R, &s),
        ])
    }

    pub fn from_coords(c: &KVec) -> Self {
        E8Element {
            phi: E7Element::from_coords(&c.slice(0, P_OFF)),
            p: PVector::from_kvec(&c.slice(P_OFF, Q_OFF)),
            q: PVector::from_kvec(&c.slice(Q_OFF, R)),
            r: c.value(R),
            u: c.value(R + 1),
            v: c.value(R + 2),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.first_nonzero_component().is_none()
    }

    /// Name of the first nonzero component, in the order `Φ, P, Q, r, u, v`.
    pub fn first_nonzero_component(&self) -> Option<&'static str> {
        if !self.phi.is_zero() {
            Some("phi")
        } else if !self.p.is_zero() {
            Some("p")
        } else if !self.q.is_zero() {
            Some("q")
        } else if !self.r.is_zero() {
            Some("r")
        } else if !self.u.is_zero() {
            Some("u")
        } else if !self.v.is_zero() {
            Some("v")
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        E8Element {
            phi: self.phi.add(&o.phi),
            p: self.p.add(&o.p),
            q: self.q.add(&o.q),
            r: &self.r + &o.r,
            u: &self.u + &o.u,
            v: &self.v + &o.v,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Cyclo::one())
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        E8Element {
            phi: self.phi.scale(c),
            p: self.p.scale(c),
            q: self.q.scale(c),
            r: &self.r * c,
            u: &self.u * c,
            v: &self.v * c,
        }
    }

    /// `Q = −τλP`, `r ∈ iR`, `v = −τu`, `Φ` compact.
    pub fn is_compact(&self) -> bool {
        self.q == compact_partner(&self.p)
            && self.r.tau() == -&self.r
            && self.v == -self.u.tau()
            && self.phi.is_compact()
    }

    /// The bracket
    ///
    /// ```text
    /// Φ = [Φ₁, Φ₂] + P₁×Q₂ − P₂×Q₁
    /// P = Φ₁P₂ − Φ₂P₁ + r₁P₂ − r₂P₁ + u₁Q₂ − u₂Q₁
    /// Q = Φ₁Q₂ − Φ₂Q₁ − r₁Q₂ + r₂Q₁ + v₁P₂ − v₂P₁
    /// r = −⅛{P₁, Q₂} + ⅛{P₂, Q₁} + u₁v₂ − u₂v₁
    /// u = ¼{P₁, P₂} + 2r₁u₂ − 2r₂u₁
    /// v = −¼{Q₁, Q₂} − 2r₁v₂ + 2r₂v₁
    /// ```
    pub fn bracket(&self, o: &Self) -> Self {
        let (p1, q1, p2, q2) = (&self.p, &self.q, &o.p, &o.q);
        let (phi1, phi2) = (&self.phi, &o.phi);
        let two = Cyclo::from_int(2);

        let mut phi = if phi1.is_zero() || phi2.is_zero() {
            E7Element::zero()
        } else {
            phi1.bracket(phi2)
        };
        if !p1.is_zero() && !q2.is_zero() {
            phi = phi.add(&cross_pq(p1, q2));
        }
        if !p2.is_zero() && !q1.is_zero() {
            phi = phi.sub(&cross_pq(p2, q1));
        }

        let act = |f: &E7Element, x: &PVector| {
            if f.is_zero() || x.is_zero() {
                PVector::zero()
            } else {
                f.apply(x)
            }
        };
        let p = act(phi1, p2)
            .sub(&act(phi2, p1))
            .add(&p2.scale(&self.r))
            .sub(&p1.scale(&o.r))
            .add(&q2.scale(&self.u))
            .sub(&q1.scale(&o.u));
        let q = act(phi1, q2)
            .sub(&act(phi2, q1))
            .sub(&q2.scale(&self.r))
            .add(&q1.scale(&o.r))
            .add(&p2.scale(&self.v))
            .sub(&p1.scale(&o.v));

        let r = &(&(&skew_form(p2, q1) - &skew_form(p1, q2)) * &frac(1, 8)) + &(&(&self.u * &o.v) - &(&o.u * &self.v));
        let u = &(&skew_form(p1, p2) * &frac(1, 4)) + &(&two * &(&(&self.r * &o.u) - &(&o.r * &self.u)));
        let v = &(&skew_form(q1, q2) * &frac(-1, 4)) - &(&two * &(&(&self.r * &o.v) - &(&o.r * &self.v)));
        E8Element { phi, p, q, r, u, v }
    }
}

/// `−τλP`.
pub fn compact_partner(p: &PVector) -> PVector {
    PVector::from_kvec(&lambda().apply(&p.to_kvec())).tau().neg()
}
