use super::{PVector, ETA, PDIM, XI};
use crate::error::AlgebraError;
use crate::jordan::{bilinear, cross, cross_operator, gram, JDIM};
use crate::linalg::{Combiner, KVec, Operator, SparseVec};
use crate::scalar::{Cyclo, Rational};

/// Length of the coordinate vector `(φ, A, B, ν)`.
pub const E7_COORDS: usize = JDIM * JDIM + 2 * JDIM + 1;
const A_OFF: usize = JDIM * JDIM;
const B_OFF: usize = A_OFF + JDIM;
const NU: usize = B_OFF + JDIM;

/// `Φ(φ, A, B, ν)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct E7Element {
    pub phi: Operator,
    pub a: KVec,
    pub b: KVec,
    pub nu: Cyclo,
}

fn third() -> Rational {
    Rational::new(1, 3)
}

/// `ᵗφY`, the `(,)`-adjoint applied without materializing it:
/// `(ᵗφY)_j = (φe_j, Y)/g_j`.
pub fn transpose_apply(phi: &Operator, y: &KVec) -> KVec {
    let g = gram();
    let entries: Vec<(usize, Cyclo)> = (0..JDIM)
        .filter_map(|j| {
            let v = bilinear(phi.column(j), y);
            (!v.is_zero()).then(|| (j, v.scale(&g[j].inv().expect("gram"))))
        })
        .collect();
    SparseVec::from_terms(entries)
}

impl E7Element {
    pub fn new(phi: Operator, a: KVec, b: KVec, nu: Cyclo) -> Self {
        E7Element { phi, a, b, nu }
    }

    pub fn zero() -> Self {
        E7Element::new(Operator::zero(JDIM), KVec::new(), KVec::new(), Cyclo::zero())
    }

    /// `Φ(φ, 0, 0, 0)`.
    pub fn from_phi(phi: Operator) -> Self {
        E7Element::new(phi, KVec::new(), KVec::new(), Cyclo::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.a.is_zero() && self.b.is_zero() && self.nu.is_zero()
    }

    pub fn coords(&self) -> KVec {
        let nu = SparseVec::single(0, self.nu.clone());
        SparseVec::concat(&[(0, &self.phi.coords()), (A_OFF, &self.a), (B_OFF, &self.b), (NU, &nu)])
    }

    pub fn from_coords(v: &KVec) -> Self {
        E7Element {
            phi: Operator::from_coords(JDIM, &v.slice(0, A_OFF)),
            a: v.slice(A_OFF, B_OFF),
            b: v.slice(B_OFF, NU),
            nu: v.value(NU),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        E7Element::new(self.phi.add(&o.phi), self.a.add(&o.a), self.b.add(&o.b), &self.nu + &o.nu)
    }

    pub fn sub(&self, o: &Self) -> Self {
        E7Element::new(self.phi.sub(&o.phi), self.a.sub(&o.a), self.b.sub(&o.b), &self.nu - &o.nu)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        E7Element::new(self.phi.scale(c), self.a.scale(c), self.b.scale(c), &self.nu * c)
    }

    pub fn neg(&self) -> Self {
        E7Element::new(self.phi.neg(), self.a.neg(), self.b.neg(), -&self.nu)
    }

    /// `τΦτ = Φ(τφτ, τA, τB, τν)`.
    pub fn tau(&self) -> Self {
        E7Element::new(self.phi.tau(), self.a.tau(), self.b.tau(), self.nu.tau())
    }

    /// The compact-form conditions `B = −τA`, `ν ∈ iR`, `φ ∈ e₆`.
    pub fn is_compact(&self) -> bool {
        self.b == self.a.tau().neg() && self.nu.tau() == -&self.nu && crate::f4e6::is_e6_algebra(&self.phi)
    }

    /// `ΦP = (φX − ⅓νX + 2B×Y + ηA, 2A×X − ᵗφY + ⅓νY + ξB, (A,Y) + νξ, (B,X) − νη)`.
    pub fn apply(&self, p: &PVector) -> PVector {
        let nu3 = self.nu.scale(&third());
        let two = Cyclo::from_int(2);
        let mut x = Combiner::new();
        x.add_vec(&self.phi.apply(&p.x));
        x.add_scaled(&-&nu3, &p.x);
        if !p.y.is_zero() && !self.b.is_zero() {
            x.add_scaled(&two, &cross(&self.b, &p.y));
        }
        x.add_scaled(&p.eta, &self.a);
        let mut y = Combiner::new();
        if !p.x.is_zero() && !self.a.is_zero() {
            y.add_scaled(&two, &cross(&self.a, &p.x));
        }
        if !p.y.is_zero() {
            y.add_scaled(&-Cyclo::one(), &transpose_apply(&self.phi, &p.y));
            y.add_scaled(&nu3, &p.y);
        }
        y.add_scaled(&p.xi, &self.b);
        let xi = &bilinear(&self.a, &p.y) + &(&self.nu * &p.xi);
        let eta = &bilinear(&self.b, &p.x) - &(&self.nu * &p.eta);
        PVector::new(x.finish(), y.finish(), xi, eta)
    }

    /// The 56×56 matrix of `P ↦ ΦP`.
    pub fn operator(&self) -> Operator {
        let g = gram();
        let two = Cyclo::from_int(2);
        let nu3 = self.nu.scale(&third());
        let phi_t = self.phi.transpose_wrt(g);
        let a_cross = cross_operator(&self.a).scale(&two);
        let b_cross = cross_operator(&self.b).scale(&two);
        let mut cols = Vec::with_capacity(PDIM);
        for j in 0..JDIM {
            let x = self.phi.column(j).sub(&SparseVec::single(j, nu3.clone()));
            let y = a_cross.column(j);
            let eta = SparseVec::single(ETA, self.b.value(j).scale(&g[j]));
            cols.push(SparseVec::concat(&[(0, &x), (JDIM, y), (0, &eta)]));
        }
        for j in 0..JDIM {
            let x = b_cross.column(j);
            let y = phi_t.column(j).neg().add(&SparseVec::single(j, nu3.clone()));
            let xi = SparseVec::single(XI, self.a.value(j).scale(&g[j]));
            cols.push(SparseVec::concat(&[(0, x), (JDIM, &y), (0, &xi)]));
        }
        let nu = SparseVec::single(0, self.nu.clone());
        cols.push(SparseVec::concat(&[(JDIM, &self.b), (XI, &nu)]));
        cols.push(SparseVec::concat(&[(0, &self.a), (ETA, &nu.neg())]));
        Operator::from_columns(cols)
    }

    /// Reads `(φ, A, B, ν)` off an operator of the form `Φ(φ, A, B, ν)`:
    /// the probe `(0,0,0,1)` gives `(A, 0, 0, −ν)`, the probe `(0,0,1,0)`
    /// gives `(0, B, ν, 0)`, and the `X → X` block is `φ − ⅓ν`.
    pub fn from_operator_unchecked(op: &Operator) -> Self {
        Self::from_probe_columns(|k| op.column(k).clone())
    }

    fn from_probe_columns(col: impl Fn(usize) -> KVec) -> Self {
        let eta_col = col(ETA);
        let xi_col = col(XI);
        let a = eta_col.slice(0, JDIM);
        let nu = -eta_col.value(ETA);
        let b = xi_col.slice(JDIM, 2 * JDIM);
        let nu3 = nu.scale(&third());
        let phi = Operator::of(JDIM, |j| col(j).slice(0, JDIM).add(&SparseVec::single(j, nu3.clone())));
        E7Element::new(phi, a, b, nu)
    }

    /// As [`E7Element::from_operator_unchecked`], failing unless the
    /// operator is exactly `Φ` of the decoded quadruple.
    pub fn from_operator(op: &Operator) -> Result<Self, AlgebraError> {
        let e = Self::from_operator_unchecked(op);
        match e.operator().first_difference(op) {
            None => Ok(e),
            Some(k) => Err(AlgebraError::WrongForm(format!("Φ(φ, A, B, ν) (column {k})"))),
        }
    }

    /// `[Φ₁, Φ₂]` computed as the operator commutator, decoded through the
    /// probes. Only the columns the decoding reads are evaluated.
    pub fn bracket(&self, other: &Self) -> Self {
        let (o1, o2) = (self.operator(), other.operator());
        Self::from_probe_columns(|k| {
            let ek = SparseVec::unit(k);
            o1.apply(&o2.apply(&ek)).sub(&o2.apply(&o1.apply(&ek)))
        })
    }

    /// `[Φ₁, Φ₂]` with the full commutator verified to be of `e₇` form.
    pub fn bracket_checked(&self, other: &Self) -> Result<Self, AlgebraError> {
        let (o1, o2) = (self.operator(), other.operator());
        Self::from_operator(&o1.commutator(&o2))
    }

    /// `sΦs⁻¹` for operators `s` on `P^C`.
    pub fn conjugate_by(&self, s: &Operator, s_inv: &Operator) -> Self {
        Self::from_operator_unchecked(&self.operator().conjugate_by(s, s_inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::JordanElement;

    fn jv(x: JordanElement) -> KVec {
        x.to_kvec()
    }

    #[test]
    fn action_examples() {
        let a = jv(JordanElement::e(1));
        let phi = Operator::of(JDIM, |j| SparseVec::single((j + 1) % JDIM, Cyclo::from_int(j as i64)));
        let e = E7Element::new(Operator::zero(JDIM), a.clone(), KVec::new(), Cyclo::zero());
        assert_eq!(e.apply(&PVector::unit(ETA)), PVector::new(a.clone(), KVec::new(), Cyclo::zero(), Cyclo::zero()));
        let e = E7Element::new(Operator::zero(JDIM), KVec::new(), a.clone(), Cyclo::zero());
        assert_eq!(e.apply(&PVector::unit(XI)), PVector::new(KVec::new(), a.clone(), Cyclo::zero(), Cyclo::zero()));
        let e = E7Element::from_phi(phi.clone());
        let x = jv(JordanElement::identity());
        let p = PVector::new(x.clone(), KVec::new(), Cyclo::zero(), Cyclo::zero());
        assert_eq!(e.apply(&p).x, phi.apply(&x));
    }

    #[test]
    fn operator_matches_apply_and_decodes() {
        let phi = Operator::of(JDIM, |j| SparseVec::from_terms(vec![(j, Cyclo::i()), ((j * 7) % JDIM, Cyclo::from_int(2))]));
        let e = E7Element::new(
            phi,
            jv(JordanElement::f(1, crate::octonion::Octonion::unit(3))),
            jv(JordanElement::e(2)).scale(&Cyclo::i()),
            Cyclo::frac(3, 2),
        );
        let op = e.operator();
        for k in 0..PDIM {
            assert_eq!(op.column(k), &e.apply(&PVector::unit(k)).to_kvec(), "column {k}");
        }
        assert_eq!(E7Element::from_operator(&op).unwrap(), e);
        assert_eq!(E7Element::from_coords(&e.coords()), e);
        assert!(E7Element::from_operator(&Operator::identity(PDIM)).is_err());
    }
}
