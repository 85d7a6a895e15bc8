use std::fmt;

use super::sparse::{Combiner, SparseVec};
use crate::scalar::{Cyclo, Rational};

/// A square matrix over `K`, stored by columns. Column `j` is the image of
/// the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Operator {
    dim: usize,
    cols: Vec<SparseVec<Cyclo>>,
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({}x{}, nnz={})", self.dim, self.dim, self.nnz())
    }
}

impl Operator {
    pub fn zero(dim: usize) -> Self {
        Operator {
            dim,
            cols: vec![SparseVec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, &Cyclo::one())
    }

    pub fn scalar(dim: usize, c: &Cyclo) -> Self {
        Operator {
            dim,
            cols: (0..dim).map(|k| SparseVec::single(k, c.clone())).collect(),
        }
    }

    pub fn diagonal(values: &[Cyclo]) -> Self {
        Operator {
            dim: values.len(),
            cols: values
                .iter()
                .enumerate()
                .map(|(k, v)| SparseVec::single(k, v.clone()))
                .collect(),
        }
    }

    pub fn from_columns(cols: Vec<SparseVec<Cyclo>>) -> Self {
        let dim = cols.len();
        debug_assert!(cols.iter().all(|c| c.support_bound() <= dim));
        Operator { dim, cols }
    }

    /// Materializes a linear map from its action on the basis vectors.
    pub fn of(dim: usize, action: impl Fn(usize) -> SparseVec<Cyclo>) -> Self {
        Self::from_columns((0..dim).map(action).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &SparseVec<Cyclo> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec<Cyclo>] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Cyclo {
        self.cols[j].value(i)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec<Cyclo>) -> SparseVec<Cyclo> {
        match v.nnz() {
            0 => SparseVec::new(),
            1 => {
                let (k, c) = &v.entries()[0];
                if c.is_one() {
                    self.cols[*k].clone()
                } else {
                    self.cols[*k].scale(c)
                }
            }
            _ => {
                let mut acc = Combiner::new();
                for (k, c) in v.iter() {
                    acc.add_scaled(c, &self.cols[*k]);
                }
                acc.finish()
            }
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Operator) -> Operator {
        assert_eq!(self.dim, other.dim);
        Operator {
            dim: self.dim,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &Operator) -> Operator {
        Operator {
            dim: self.dim,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        Operator {
            dim: self.dim,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Operator {
        Operator {
            dim: self.dim,
            cols: self.cols.iter().map(SparseVec::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Operator {
        Operator {
            dim: self.dim,
            cols: self.cols.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn scale_q(&self, r: &Rational) -> Operator {
        Operator {
            dim: self.dim,
            cols: self.cols.iter().map(|v| v.scale_q(r)).collect(),
        }
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &Operator) -> Operator {
        self.compose(other).sub(&other.compose(self))
    }

    /// `s ∘ self ∘ s_inv`.
    pub fn conjugate_by(&self, s: &Operator, s_inv: &Operator) -> Operator {
        s.compose(&self.compose(s_inv))
    }

    /// Entrywise complex conjugation, i.e. `τ∘self∘τ` for a real basis.
    pub fn tau(&self) -> Operator {
        Operator {
            dim: self.dim,
            cols: self.cols.iter().map(SparseVec::tau).collect(),
        }
    }

    pub fn transpose(&self) -> Operator {
        let mut terms: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col.iter() {
                terms[*i].push((j, v.clone()));
            }
        }
        Operator {
            dim: self.dim,
            cols: terms.into_iter().map(SparseVec::from_terms).collect(),
        }
    }

    /// Adjoint with respect to the diagonal bilinear form `diag(gram)`:
    /// `(self x, y) = (x, ᵗself y)`.
    pub fn transpose_wrt(&self, gram: &[Rational]) -> Operator {
        let mut terms: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col.iter() {
                // (ᵗφ)_{ji} = φ_{ij} g_i / g_j
                let w = &gram[*i] / &gram[j];
                terms[*i].push((j, v.scale(&w)));
            }
        }
        Operator {
            dim: self.dim,
            cols: terms.into_iter().map(SparseVec::from_terms).collect(),
        }
    }

    /// Column-major coordinates: entry `(i, j)` sits at index `j·dim + i`.
    pub fn coords(&self) -> SparseVec<Cyclo> {
        let mut entries = Vec::with_capacity(self.nnz());
        for (j, col) in self.cols.iter().enumerate() {
            entries.extend(col.iter().map(|(i, v)| (j * self.dim + i, v.clone())));
        }
        SparseVec::from_terms(entries)
    }

    pub fn from_coords(dim: usize, v: &SparseVec<Cyclo>) -> Operator {
        let mut terms: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); dim];
        for (k, x) in v.iter() {
            terms[k / dim].push((k % dim, x.clone()));
        }
        Operator {
            dim,
            cols: terms.into_iter().map(SparseVec::from_terms).collect(),
        }
    }

    /// First basis index whose images under `self` and `other` differ.
    pub fn first_difference(&self, other: &Operator) -> Option<usize> {
        (0..self.dim).find(|j| self.cols[*j] != other.cols[*j])
    }
}
