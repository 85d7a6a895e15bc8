//! The exceptional Jordan algebra `J` of 3×3 Hermitian octonionic matrices
//! and its complexification `J^C`, in the layout
//!
//! ```text
//! ⎛ ξ₁  x₃  x̄₂ ⎞
//! ⎜ x̄₃  ξ₂  x₁ ⎟
//! ⎝ x₂  x̄₁  ξ₃ ⎠
//! ```
//!
//! Coordinates: `ξᵢ` at index `i`, the `k`-th octonion coordinate of `xᵢ` at
//! `3 + 8i + k` (both zero-based). Fast arithmetic works on sparse
//! coordinate vectors through precomputed structure tables.

mod involution;
mod split;

use std::sync::OnceLock;

pub use involution::JordanInvolution;
pub use split::{CpxMatrix, SplitElement};

use crate::linalg::{Combiner, KVec, Operator, SparseVec};
use crate::octonion::Octonion;
use crate::scalar::{Cyclo, Rational};

pub const JDIM: usize = 27;

pub fn xi_index(i: usize) -> usize {
    i
}

pub fn x_index(i: usize, k: usize) -> usize {
    3 + 8 * i + k
}

/// An element of `J^C`; it lies in the real form `J` when every coordinate
/// is τ-fixed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct JordanElement {
    pub xi: [Cyclo; 3],
    pub x: [Octonion; 3],
}

impl JordanElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `E = E₁ + E₂ + E₃`.
    pub fn identity() -> Self {
        JordanElement {
            xi: [Cyclo::one(), Cyclo::one(), Cyclo::one()],
            ..Default::default()
        }
    }

    /// The diagonal idempotent `Eᵢ` (`i` zero-based).
    pub fn e(i: usize) -> Self {
        let mut out = Self::zero();
        out.xi[i] = Cyclo::one();
        out
    }

    /// `Fᵢ(a)`: the element with `a` in the `xᵢ` slot (`i` zero-based).
    pub fn f(i: usize, a: Octonion) -> Self {
        let mut out = Self::zero();
        out.x[i] = a;
        out
    }

    pub fn diagonal(xi: [Cyclo; 3]) -> Self {
        JordanElement {
            xi,
            ..Default::default()
        }
    }

    pub fn to_kvec(&self) -> KVec {
        let mut entries = Vec::new();
        for (i, v) in self.xi.iter().enumerate() {
            if !v.is_zero() {
                entries.push((xi_index(i), v.clone()));
            }
        }
        for (i, o) in self.x.iter().enumerate() {
            for (k, v) in o.coords().iter().enumerate() {
                if !v.is_zero() {
                    entries.push((x_index(i, k), v.clone()));
                }
            }
        }
        SparseVec::from_terms(entries)
    }

    pub fn from_kvec(v: &KVec) -> Self {
        let mut xi: [Cyclo; 3] = Default::default();
        let mut x: [[Cyclo; 8]; 3] = Default::default();
        for (idx, val) in v.iter() {
            if *idx < 3 {
                xi[*idx] = val.clone();
            } else {
                let j = idx - 3;
                x[j / 8][j % 8] = val.clone();
            }
        }
        JordanElement {
            xi,
            x: x.map(Octonion::new),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(Cyclo::is_zero) && self.x.iter().all(Octonion::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.to_kvec().iter().all(|(_, v)| v.is_real())
    }

    /// The full octonionic matrix.
    pub fn matrix(&self) -> [[Octonion; 3]; 3] {
        let s = |i: usize| Octonion::scalar(self.xi[i].clone());
        let [x1, x2, x3] = &self.x;
        [
            [s(0), x3.clone(), x2.conj()],
            [x3.conj(), s(1), x1.clone()],
            [x2.clone(), x1.conj(), s(2)],
        ]
    }

    /// Reads back a Hermitian matrix; off-pattern parts are ignored.
    pub fn from_matrix(m: &[[Octonion; 3]; 3]) -> Self {
        JordanElement {
            xi: [0, 1, 2].map(|i| m[i][i].coord(0).clone()),
            x: [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
        }
    }

    /// `X∘Y = (XY + YX)/2` computed from full octonionic matrix products.
    /// Reference implementation; [`JordanElement::jordan_mul`] uses tables.
    pub fn jordan_mul_reference(&self, other: &Self) -> Self {
        let (a, b) = (self.matrix(), other.matrix());
        let half = Cyclo::frac(1, 2);
        let mut out: [[Octonion; 3]; 3] = Default::default();
        for i in 0..3 {
            for k in 0..3 {
                let mut acc = Octonion::zero();
                for j in 0..3 {
                    acc = &acc + &(&a[i][j] * &b[j][k]);
                    acc = &acc + &(&b[i][j] * &a[j][k]);
                }
                out[i][k] = acc.scale(&half);
            }
        }
        Self::from_matrix(&out)
    }

    pub fn jordan_mul(&self, other: &Self) -> Self {
        Self::from_kvec(&jmul(&self.to_kvec(), &other.to_kvec()))
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::from_kvec(&cross(&self.to_kvec(), &other.to_kvec()))
    }

    pub fn trace(&self) -> Cyclo {
        &(&self.xi[0] + &self.xi[1]) + &self.xi[2]
    }

    /// `(X, Y) = tr(X∘Y)`.
    pub fn bilinear(&self, other: &Self) -> Cyclo {
        bilinear(&self.to_kvec(), &other.to_kvec())
    }

    /// `⟨X, Y⟩ = (τX, Y)`.
    pub fn hermitian(&self, other: &Self) -> Cyclo {
        hermitian(&self.to_kvec(), &other.to_kvec())
    }

    pub fn tau(&self) -> Self {
        JordanElement {
            xi: self.xi.clone().map(|v| v.tau()),
            x: self.x.clone().map(|o| o.tau()),
        }
    }
}

/// `(trace, (X,Y), ⟨X,Y⟩)`.
pub fn forms(x: &JordanElement, y: &JordanElement) -> (Cyclo, Cyclo, Cyclo) {
    (x.trace(), x.bilinear(y), x.hermitian(y))
}

/// The 27 basis elements `E₁, E₂, E₃, F₁(e₀), …, F₃(e₇)`.
pub fn jordan_basis() -> Vec<JordanElement> {
    (0..JDIM).map(|k| JordanElement::from_kvec(&SparseVec::unit(k))).collect()
}

struct Tables {
    mul: Vec<Vec<KVec>>,
    cross: Vec<Vec<KVec>>,
    gram: Vec<Rational>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let basis = jordan_basis();
        let mul: Vec<Vec<KVec>> = basis
            .iter()
            .map(|a| basis.iter().map(|b| a.jordan_mul_reference(b).to_kvec()).collect())
            .collect();
        let mut gram = Vec::with_capacity(JDIM);
        for a in 0..JDIM {
            for b in 0..JDIM {
                let g = trace(&mul[a][b]);
                if a == b {
                    gram.push(g.as_rational().expect("rational gram").clone());
                } else {
                    assert!(g.is_zero(), "basis is not orthogonal");
                }
            }
        }
        let e = JordanElement::identity().to_kvec();
        let cross = (0..JDIM)
            .map(|a| {
                (0..JDIM)
                    .map(|b| {
                        // ½(2X∘Y − tr(X)Y − tr(Y)X + (trX trY − (X,Y))E)
                        let ta = if a < 3 { Rational::one() } else { Rational::zero() };
                        let tb = if b < 3 { Rational::one() } else { Rational::zero() };
                        let xy = if a == b { gram[a].clone() } else { Rational::zero() };
                        let mut acc = Combiner::new();
                        acc.add_vec(&mul[a][b].scale_q(&Rational::from_int(2)));
                        acc.push(b, Cyclo::from_rational(-&ta));
                        acc.push(a, Cyclo::from_rational(-&tb));
                        acc.add_scaled(&Cyclo::from_rational(&(&ta * &tb) - &xy), &e);
                        acc.finish().scale_q(&Rational::new(1, 2))
                    })
                    .collect()
            })
            .collect();
        Tables { mul, cross, gram }
    })
}

/// Diagonal Gram matrix of `(,)` on the basis: `1` on `ξ`, `2` on octonion
/// coordinates.
pub fn gram() -> &'static [Rational] {
    &tables().gram
}

fn bilinear_table(table: &[Vec<KVec>], x: &KVec, y: &KVec) -> KVec {
    let mut acc = Combiner::new();
    for (a, xa) in x.iter() {
        for (b, yb) in y.iter() {
            acc.add_scaled(&(xa * yb), &table[*a][*b]);
        }
    }
    acc.finish()
}

/// Basis product `e_a ∘ e_b`.
pub fn basis_jmul(a: usize, b: usize) -> &'static KVec {
    &tables().mul[a][b]
}

/// Basis cross product `e_a × e_b`.
pub fn basis_cross(a: usize, b: usize) -> &'static KVec {
    &tables().cross[a][b]
}

pub fn jmul(x: &KVec, y: &KVec) -> KVec {
    bilinear_table(&tables().mul, x, y)
}

/// `X × Y = ½(2X∘Y − tr(X)Y − tr(Y)X + (tr X tr Y − (X,Y))E)`.
pub fn cross(x: &KVec, y: &KVec) -> KVec {
    bilinear_table(&tables().cross, x, y)
}

pub fn trace(x: &KVec) -> Cyclo {
    let mut t = Cyclo::zero();
    for (k, v) in x.iter() {
        if *k < 3 {
            t += v;
        }
    }
    t
}

/// `(X, Y) = tr(X∘Y)`.
pub fn bilinear(x: &KVec, y: &KVec) -> Cyclo {
    let g = gram();
    let (a, b) = (x.entries(), y.entries());
    let (mut i, mut j) = (0, 0);
    let mut acc = Cyclo::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&a[i].1 * &b[j].1).scale(&g[a[i].0]);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// `⟨X, Y⟩ = (τX, Y)`.
pub fn hermitian(x: &KVec, y: &KVec) -> Cyclo {
    bilinear(&x.tau(), y)
}

pub fn identity() -> KVec {
    SparseVec::from_dense(&[Cyclo::one(), Cyclo::one(), Cyclo::one()])
}

/// Jordan multiplication `Z ↦ X∘Z`.
pub fn mult_operator(x: &KVec) -> Operator {
    Operator::of(JDIM, |b| jmul(x, &SparseVec::unit(b)))
}

/// `Z ↦ X × Z`.
pub fn cross_operator(x: &KVec) -> Operator {
    let t = tables();
    Operator::of(JDIM, |b| {
        let mut acc = Combiner::new();
        for (a, xa) in x.iter() {
            acc.add_scaled(xa, &t.cross[*a][b]);
        }
        acc.finish()
    })
}

/// `ᵗφ`, the adjoint with respect to `(,)`.
pub fn transpose(phi: &Operator) -> Operator {
    phi.transpose_wrt(gram())
}
