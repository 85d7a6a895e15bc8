use std::fmt;

use crate::scalar::{Cyclo, Field, Rational};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F> Default for SparseVec<F> {
    fn default() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }
}

impl<F: fmt::Debug> fmt::Debug for SparseVec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k, v)))
            .finish()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, F::one())],
        }
    }

    pub fn single(index: usize, value: F) -> Self {
        if value.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: vec![(index, value)],
        }
    }

    /// Builds a vector from unsorted terms, summing repeated indices.
    pub fn from_terms(mut terms: Vec<(usize, F)>) -> Self {
        if terms.len() > 1 {
            terms.sort_by_key(|t| t.0);
        }
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(terms.len());
        for (k, v) in terms {
            match entries.last_mut() {
                Some((last, acc)) if *last == k => *acc = acc.add(&v),
                _ => {
                    if let Some((_, acc)) = entries.last() {
                        if acc.is_zero() {
                            entries.pop();
                        }
                    }
                    entries.push((k, v));
                }
            }
        }
        if entries.last().is_some_and(|(_, v)| v.is_zero()) {
            entries.pop();
        }
        SparseVec { entries }
    }

    pub fn from_dense(values: &[F]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<F> {
        let mut out = vec![F::zero(); len];
        for (k, v) in &self.entries {
            out[*k] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, F)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, F)> {
        self.entries
    }

    pub fn get(&self, index: usize) -> Option<&F> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn value(&self, index: usize) -> F {
        self.get(index).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&(usize, F)> {
        self.entries.first()
    }

    /// Largest stored index plus one.
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |e| e.0 + 1)
    }

    fn merge(&self, other: &Self, sign: bool) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let v = if sign { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, v));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = if sign {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !v.is_zero() {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for e in &b[j..] {
            let v = if sign { e.1.neg() } else { e.1.clone() };
            out.push((e.0, v));
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(k, v)| (*k, v.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, v.mul(c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        self.add(&other.scale(c))
    }

    pub fn dot(&self, other: &Self) -> F {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = F::zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc = acc.add(&a[i].1.mul(&b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Adds `offset` to every index.
    pub fn shift(&self, offset: usize) -> Self {
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k + offset, v.clone()))
                .collect(),
        }
    }

    /// Entries with index in `[start, end)`, re-based to start at zero.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        let lo = self.entries.partition_point(|e| e.0 < start);
        let hi = self.entries.partition_point(|e| e.0 < end);
        SparseVec {
            entries: self.entries[lo..hi]
                .iter()
                .map(|(k, v)| (k - start, v.clone()))
                .collect(),
        }
    }

    /// Concatenates blocks placed at the given offsets (ascending, disjoint).
    pub fn concat(blocks: &[(usize, &SparseVec<F>)]) -> Self {
        let mut entries = Vec::new();
        for (offset, block) in blocks {
            entries.extend(block.entries.iter().map(|(k, v)| (k + offset, v.clone())));
        }
        SparseVec { entries }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseVec<G> {
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// Permutes indices: entry `k` moves to `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Self::from_terms(
            self.entries
                .iter()
                .map(|(k, v)| (perm[*k], v.clone()))
                .collect(),
        )
    }
}

impl SparseVec<Cyclo> {
    pub fn scale_q(&self, r: &Rational) -> Self {
        self.map(|v| v.scale(r))
    }

    /// Entrywise complex conjugation.
    pub fn tau(&self) -> Self {
        self.map(Cyclo::tau)
    }

    pub fn from_rational(v: &SparseVec<Rational>) -> Self {
        v.map(|x| Cyclo::from_rational(x.clone()))
    }

    /// The rational vector, if every entry is rational.
    pub fn to_rational(&self) -> Option<SparseVec<Rational>> {
        let mut entries = Vec::with_capacity(self.nnz());
        for (k, v) in self.iter() {
            entries.push((*k, v.as_rational()?.clone()));
        }
        Some(SparseVec { entries })
    }

    pub fn is_gaussian(&self) -> bool {
        self.iter().all(|(_, v)| v.is_gaussian())
    }
}

/// Accumulates `Σ cᵢ·vᵢ` without intermediate merges.
pub struct Combiner<F> {
    terms: Vec<(usize, F)>,
}

impl<F: Field> Default for Combiner<F> {
    fn default() -> Self {
        Combiner { terms: Vec::new() }
    }
}

impl<F: Field> Combiner<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, index: usize, value: F) {
        if !value.is_zero() {
            self.terms.push((index, value));
        }
    }

    pub fn add_scaled(&mut self, c: &F, v: &SparseVec<F>) {
        if c.is_zero() {
            return;
        }
        for (k, x) in v.iter() {
            self.terms.push((*k, x.mul(c)));
        }
    }

    pub fn add_vec(&mut self, v: &SparseVec<F>) {
        self.terms.extend(v.iter().cloned());
    }

    pub fn finish(self) -> SparseVec<F> {
        SparseVec::from_terms(self.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let v = SparseVec::from_terms(vec![(3, q(1, 2)), (1, q(1, 1)), (3, q(-1, 2)), (0, q(0, 1))]);
        assert_eq!(v.entries(), &[(1, q(1, 1))]);
        let w = SparseVec::from_terms(vec![(2, q(1, 1)), (2, q(-1, 1))]);
        assert!(w.is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = SparseVec::from_dense(&[q(1, 1), q(0, 1), q(2, 1)]);
        let b = SparseVec::from_dense(&[q(1, 1), q(5, 1), q(2, 1)]);
        assert_eq!(a.sub(&b).entries(), &[(1, q(-5, 1))]);
        assert_eq!(a.dot(&b), q(5, 1));
        assert_eq!(a.axpy(&q(-1, 1), &a), SparseVec::new());
        assert_eq!(b.slice(1, 3).entries(), &[(0, q(5, 1)), (1, q(2, 1))]);
    }
}
