//! Generic real Lie-algebra computations over coordinate models: fixed
//! subalgebras under automorphisms, centralizers, closure ranks.

use rayon::prelude::*;

use crate::error::AlgebraError;
use crate::linalg::{real_kernel_of_columns, Combiner, KVec, Operator, RealSpan, SparseVec};
use crate::scalar::Cyclo;

/// A Lie algebra whose elements have exact coordinates in some `K^n`.
pub trait LieModel: Sync {
    type Elem: Clone + Send + Sync;

    /// Length of the coordinate vectors.
    fn coord_len(&self) -> usize;
    fn coords(&self, x: &Self::Elem) -> KVec;
    fn from_coords(&self, v: &KVec) -> Self::Elem;
    fn bracket(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

/// Square operators of a fixed dimension under the commutator.
#[derive(Clone, Copy, Debug)]
pub struct OperatorAlgebra {
    pub dim: usize,
}

impl LieModel for OperatorAlgebra {
    type Elem = Operator;

    fn coord_len(&self) -> usize {
        self.dim * self.dim
    }

    fn coords(&self, x: &Operator) -> KVec {
        x.coords()
    }

    fn from_coords(&self, v: &KVec) -> Operator {
        Operator::from_coords(self.dim, v)
    }

    fn bracket(&self, x: &Operator, y: &Operator) -> Operator {
        x.commutator(y)
    }
}

/// A named automorphism acting on elements of a model.
pub struct Symmetry<'a, E> {
    pub name: String,
    apply: Box<dyn Fn(&E) -> E + Send + Sync + 'a>,
}

impl<'a, E> Symmetry<'a, E> {
    pub fn new(name: impl Into<String>, apply: impl Fn(&E) -> E + Send + Sync + 'a) -> Self {
        Symmetry {
            name: name.into(),
            apply: Box::new(apply),
        }
    }

    pub fn apply(&self, x: &E) -> E {
        (self.apply)(x)
    }
}

impl<'a> Symmetry<'a, Operator> {
    /// `Ad(s): φ ↦ s φ s⁻¹`.
    pub fn conjugation(name: impl Into<String>, s: Operator, s_inv: Operator) -> Self {
        Symmetry::new(name, move |phi: &Operator| phi.conjugate_by(&s, &s_inv))
    }
}

#[derive(Clone, Debug)]
pub struct FixedSubalgebra<E> {
    pub dimension: usize,
    pub basis: Vec<E>,
    pub abelian: bool,
    /// The centralizer of the result inside the ambient algebra is the
    /// result itself.
    pub self_centralizing: bool,
    /// Every returned element was re-checked to be fixed by each symmetry.
    pub pointwise_fixed: bool,
}

/// Real linear combination `Σ λ_k b_k`.
pub fn combine<M: LieModel>(model: &M, coeffs: &KVec, basis_coords: &[KVec]) -> M::Elem {
    let mut acc = Combiner::new();
    for (k, c) in coeffs.iter() {
        acc.add_scaled(c, &basis_coords[*k]);
    }
    model.from_coords(&acc.finish())
}

/// Real dimension of the span of `elems`.
pub fn real_rank<M: LieModel>(model: &M, elems: &[M::Elem]) -> usize {
    let mut span = RealSpan::new(model.coord_len());
    for e in elems {
        span.insert(&model.coords(e));
    }
    span.dim()
}

/// Real dimension of `span(basis) + span([bᵢ, bⱼ])`. Equals the basis rank
/// iff the span is closed under the bracket.
pub fn closure_rank<M: LieModel>(model: &M, basis: &[M::Elem]) -> usize {
    let mut span = RealSpan::new(model.coord_len());
    for e in basis {
        span.insert(&model.coords(e));
    }
    for i in 0..basis.len() {
        let brackets: Vec<KVec> = (i + 1..basis.len())
            .into_par_iter()
            .map(|j| model.coords(&model.bracket(&basis[i], &basis[j])))
            .collect();
        for b in &brackets {
            span.insert(b);
        }
    }
    span.dim()
}

/// Whether every pair of elements commutes.
pub fn is_abelian<M: LieModel>(model: &M, elems: &[M::Elem]) -> bool {
    (0..elems.len()).all(|i| {
        (i + 1..elems.len())
            .into_par_iter()
            .all(|j| model.coords(&model.bracket(&elems[i], &elems[j])).is_zero())
    })
}

/// Real basis of `{x ∈ span(basis) : [x, t] = 0 for all t}`, as coefficient
/// vectors over `basis`.
pub fn centralizer_coefficients<M: LieModel>(
    model: &M,
    basis: &[M::Elem],
    targets: &[M::Elem],
) -> Vec<KVec> {
    let len = model.coord_len();
    let columns: Vec<KVec> = basis
        .par_iter()
        .map(|b| {
            let blocks: Vec<KVec> = targets
                .iter()
                .map(|t| model.coords(&model.bracket(b, t)))
                .collect();
            concat_blocks(&blocks, len)
        })
        .collect();
    real_kernel_of_columns(&columns)
}

fn concat_blocks(blocks: &[KVec], len: usize) -> KVec {
    let placed: Vec<(usize, &KVec)> = blocks.iter().enumerate().map(|(j, b)| (j * len, b)).collect();
    SparseVec::concat(&placed)
}

/// Real basis of the elements of `span(basis)` fixed by every symmetry.
/// Fails if some symmetry maps a basis element outside the span.
pub fn fixed_basis<M: LieModel>(
    model: &M,
    basis: &[M::Elem],
    symmetries: &[Symmetry<'_, M::Elem>],
) -> Result<Vec<M::Elem>, AlgebraError> {
    let len = model.coord_len();
    let coords: Vec<KVec> = basis.par_iter().map(|b| model.coords(b)).collect();

    let mut span = RealSpan::new(len);
    for c in &coords {
        span.insert(c);
    }
    let mut columns: Vec<Vec<KVec>> = vec![Vec::with_capacity(symmetries.len()); basis.len()];
    for s in symmetries {
        let images: Vec<KVec> = basis.par_iter().map(|b| model.coords(&s.apply(b))).collect();
        if let Some(k) = images.iter().position(|img| !span.contains(img)) {
            return Err(AlgebraError::NotNormalizing(format!("{} (basis element {k})", s.name)));
        }
        for (k, img) in images.into_iter().enumerate() {
            columns[k].push(img.sub(&coords[k]));
        }
    }
    let columns: Vec<KVec> = columns.iter().map(|blocks| concat_blocks(blocks, len)).collect();
    let kernel = real_kernel_of_columns(&columns);
    Ok(kernel.iter().map(|c| combine(model, c, &coords)).collect())
}

/// The subalgebra of `span(basis)` fixed by every symmetry, with the
/// abelian and Cartan certificates.
pub fn fixed_subalgebra<M: LieModel>(
    model: &M,
    basis: &[M::Elem],
    symmetries: &[Symmetry<'_, M::Elem>],
) -> Result<FixedSubalgebra<M::Elem>, AlgebraError> {
    let fixed = fixed_basis(model, basis, symmetries)?;

    let pointwise_fixed = fixed.iter().all(|t| {
        let tc = model.coords(t);
        symmetries.iter().all(|s| model.coords(&s.apply(t)) == tc)
    });
    let abelian = is_abelian(model, &fixed);
    let centralizer = centralizer_coefficients(model, basis, &fixed);
    Ok(FixedSubalgebra {
        dimension: fixed.len(),
        self_centralizing: abelian && centralizer.len() == fixed.len(),
        basis: fixed,
        abelian,
        pointwise_fixed,
    })
}

/// Coefficients of `x` in the real span of `basis`, if it lies there.
pub fn real_coordinates<M: LieModel>(model: &M, basis: &[M::Elem], x: &M::Elem) -> Option<KVec> {
    let mut columns: Vec<KVec> = basis.iter().map(|b| model.coords(b)).collect();
    columns.push(model.coords(x));
    let kernel = real_kernel_of_columns(&columns);
    let n = basis.len();
    let v = kernel.iter().find(|v| v.get(n).is_some())?;
    let scale = -v.value(n).inv().ok()?;
    Some(v.slice(0, n).scale(&scale))
}

/// `Σ c_k b_k` for an explicit list of scalars.
pub fn linear_combination<M: LieModel>(model: &M, terms: &[(Cyclo, &M::Elem)]) -> M::Elem {
    let mut acc = Combiner::new();
    for (c, e) in terms {
        acc.add_scaled(c, &model.coords(e));
    }
    model.from_coords(&acc.finish())
}
