//! Real-form linear algebra over `K`.
//!
//! Real unknowns with `K`-valued equations: each equation `a` splits into
//! `Re a` and `Im a`, both in the real subfield `Q(√3)`. When every
//! coefficient lies in `Q(i)` (the usual case) the split rows are rational
//! and elimination runs over `Q`; otherwise it switches to `K`, whose rank
//! over the real subfield equals the real rank.

use super::echelon::Echelon;
use super::sparse::SparseVec;
use crate::scalar::{Cyclo, Rational};

#[derive(Clone, Debug)]
pub enum RealEchelon {
    Rational(Echelon<Rational>),
    Field(Echelon<Cyclo>),
}

impl RealEchelon {
    pub fn new(ncols: usize) -> Self {
        RealEchelon::Rational(Echelon::new(ncols))
    }

    pub fn ncols(&self) -> usize {
        match self {
            RealEchelon::Rational(e) => e.ncols(),
            RealEchelon::Field(e) => e.ncols(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            RealEchelon::Rational(e) => e.rank(),
            RealEchelon::Field(e) => e.rank(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols()
    }

    fn upgrade(&mut self) {
        if let RealEchelon::Rational(e) = self {
            let mut k = Echelon::new(e.ncols());
            for row in e.rows() {
                k.insert(&SparseVec::from_rational(&row));
            }
            *self = RealEchelon::Field(k);
        }
    }

    /// Inserts a row whose entries are real (τ-fixed).
    pub fn insert_real(&mut self, row: &SparseVec<Cyclo>) -> bool {
        debug_assert!(row.iter().all(|(_, v)| v.is_real()));
        if let RealEchelon::Rational(e) = self {
            if let Some(r) = row.to_rational() {
                return e.insert(&r);
            }
            self.upgrade();
        }
        match self {
            RealEchelon::Field(e) => e.insert(row),
            RealEchelon::Rational(_) => unreachable!(),
        }
    }

    /// Inserts the real and imaginary parts of a `K`-valued equation.
    pub fn insert_equation(&mut self, row: &SparseVec<Cyclo>) {
        let (re, im) = split_equation(row);
        if !re.is_zero() {
            self.insert_real(&re);
        }
        if !im.is_zero() {
            self.insert_real(&im);
        }
    }

    pub fn contains_real(&self, row: &SparseVec<Cyclo>) -> bool {
        match self {
            RealEchelon::Rational(e) => match row.to_rational() {
                Some(r) => e.contains(&r),
                None => {
                    let mut k = Echelon::new(e.ncols());
                    k.extend(e.rows().iter().map(SparseVec::from_rational).collect::<Vec<_>>().iter());
                    k.contains(row)
                }
            },
            RealEchelon::Field(e) => e.contains(row),
        }
    }

    pub fn kernel_basis(&self) -> Vec<SparseVec<Cyclo>> {
        match self {
            RealEchelon::Rational(e) => e
                .kernel_basis()
                .iter()
                .map(SparseVec::from_rational)
                .collect(),
            RealEchelon::Field(e) => e.kernel_basis(),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, RealEchelon::Rational(_))
    }
}

/// `(Re a, Im a)` of an equation row.
pub fn split_equation(row: &SparseVec<Cyclo>) -> (SparseVec<Cyclo>, SparseVec<Cyclo>) {
    (row.map(Cyclo::re), row.map(Cyclo::im))
}

/// Interleaved real coordinates `(Re v₀, Im v₀, Re v₁, …)` of a vector in
/// `K^n`, so that real-linear independence in `K^n` becomes linear
/// independence over the real subfield.
pub fn realify(v: &SparseVec<Cyclo>) -> SparseVec<Cyclo> {
    let mut entries = Vec::with_capacity(2 * v.nnz());
    for (k, x) in v.iter() {
        let (re, im) = (x.re(), x.im());
        if !re.is_zero() {
            entries.push((2 * k, re));
        }
        if !im.is_zero() {
            entries.push((2 * k + 1, im));
        }
    }
    SparseVec::from_terms(entries)
}

/// Real kernel of the `K`-linear conditions whose columns are given: finds
/// all real `λ` with `Σ λ_k columns[k] = 0`.
pub fn real_kernel_of_columns(columns: &[SparseVec<Cyclo>]) -> Vec<SparseVec<Cyclo>> {
    let mut by_row: std::collections::BTreeMap<usize, Vec<(usize, Cyclo)>> = Default::default();
    for (k, col) in columns.iter().enumerate() {
        for (r, v) in col.iter() {
            by_row.entry(*r).or_default().push((k, v.clone()));
        }
    }
    let mut ech = RealEchelon::new(columns.len());
    for (_, terms) in by_row {
        if ech.is_full() {
            break;
        }
        ech.insert_equation(&SparseVec::from_terms(terms));
    }
    ech.kernel_basis()
}

/// Real span of a family of `K`-vectors.
#[derive(Clone, Debug)]
pub struct RealSpan {
    echelon: RealEchelon,
}

impl RealSpan {
    /// `len` is the length of the `K`-vectors.
    pub fn new(len: usize) -> Self {
        RealSpan {
            echelon: RealEchelon::new(2 * len),
        }
    }

    pub fn insert(&mut self, v: &SparseVec<Cyclo>) -> bool {
        self.echelon.insert_real(&realify(v))
    }

    pub fn contains(&self, v: &SparseVec<Cyclo>) -> bool {
        self.echelon.contains_real(&realify(v))
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_versus_complex_dimension() {
        // λ₀·1 + λ₁·i = 0 has only the trivial real solution.
        let cols = vec![SparseVec::unit(0), SparseVec::single(0, Cyclo::i())];
        assert!(real_kernel_of_columns(&cols).is_empty());
        // λ₀·1 + λ₁·√3 = 0 has a one-dimensional real kernel, found over K.
        let cols = vec![SparseVec::unit(0), SparseVec::single(0, Cyclo::sqrt3())];
        let ker = real_kernel_of_columns(&cols);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        let sum = &v.value(0) + &(&v.value(1) * &Cyclo::sqrt3());
        assert!(sum.is_zero());
    }

    #[test]
    fn span_over_reals() {
        let mut s = RealSpan::new(2);
        let a = SparseVec::from_dense(&[Cyclo::one(), Cyclo::i()]);
        assert!(s.insert(&a));
        assert!(!s.insert(&a.scale(&Cyclo::from_int(3))));
        // i·a is not a real multiple of a
        assert!(s.insert(&a.scale(&Cyclo::i())));
        assert_eq!(s.dim(), 2);
        let w = SparseVec::from_dense(&[Cyclo::sqrt3(), Cyclo::zero()]);
        assert!(s.insert(&w));
        assert!(!s.echelon.is_rational());
        assert_eq!(s.dim(), 3);
    }
}
