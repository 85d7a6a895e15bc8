//! The Freudenthal space `P^C = J^C ⊕ J^C ⊕ C ⊕ C` and the Lie algebra
//! `e₇` of elements `Φ(φ, A, B, ν)` acting on it.
//!
//! `P` coordinates: `X` at `0..27`, `Y` at `27..54`, `ξ` at `54`, `η` at `55`.

mod basis;
mod cross;
mod element;
mod involution;

pub use basis::{
    compute_e7_basis, cross_operator_table, e7_algebra_defect, is_e7_algebra, is_e7_group, lambda_twist_holds, p_symmetries, e7_torus,
    E7Model,
};
pub use cross::{cross_pq, p_hermitian, skew_form, vee};
pub use element::{E7Element, E7_COORDS};
pub use involution::{lambda, lambda_inverse, PInvolution};

use crate::jordan::JDIM;
use crate::linalg::{KVec, SparseVec};
use crate::scalar::Cyclo;

pub const PDIM: usize = 2 * JDIM + 2;
pub const XI: usize = 2 * JDIM;
pub const ETA: usize = 2 * JDIM + 1;

/// `(X, Y, ξ, η) ∈ P^C`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PVector {
    pub x: KVec,
    pub y: KVec,
    pub xi: Cyclo,
    pub eta: Cyclo,
}

impl PVector {
    pub fn new(x: KVec, y: KVec, xi: Cyclo, eta: Cyclo) -> Self {
        PVector { x, y, xi, eta }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(k: usize) -> Self {
        Self::from_kvec(&SparseVec::unit(k))
    }

    pub fn to_kvec(&self) -> KVec {
        let xi = SparseVec::single(0, self.xi.clone());
        let eta = SparseVec::single(0, self.eta.clone());
        SparseVec::concat(&[(0, &self.x), (JDIM, &self.y), (XI, &xi), (ETA, &eta)])
    }

    pub fn from_kvec(v: &KVec) -> Self {
        PVector {
            x: v.slice(0, JDIM),
            y: v.slice(JDIM, 2 * JDIM),
            xi: v.value(XI),
            eta: v.value(ETA),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.xi.is_zero() && self.eta.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        PVector::new(self.x.add(&o.x), self.y.add(&o.y), &self.xi + &o.xi, &self.eta + &o.eta)
    }

    pub fn sub(&self, o: &Self) -> Self {
        PVector::new(self.x.sub(&o.x), self.y.sub(&o.y), &self.xi - &o.xi, &self.eta - &o.eta)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        PVector::new(self.x.scale(c), self.y.scale(c), &self.xi * c, &self.eta * c)
    }

    pub fn neg(&self) -> Self {
        PVector::new(self.x.neg(), self.y.neg(), -&self.xi, -&self.eta)
    }

    pub fn tau(&self) -> Self {
        PVector::new(self.x.tau(), self.y.tau(), self.xi.tau(), self.eta.tau())
    }
}
