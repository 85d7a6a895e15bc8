use super::sparse::{Combiner, SparseVec};
use crate::scalar::Field;

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a leading 1 in its pivot column and zeros in every
/// other pivot column, so the row space determines the stored rows uniquely
/// regardless of insertion order.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    pivot_row: Vec<Option<usize>>,
    rows: Vec<(usize, SparseVec<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivot_row: vec![None; ncols],
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.rows.iter().map(|r| r.0).collect();
        cols.sort_unstable();
        cols
    }

    /// The remainder of `row` after eliminating all pivot columns.
    pub fn reduce(&self, row: &SparseVec<F>) -> SparseVec<F> {
        let mut hits = false;
        let mut acc = Combiner::new();
        for (col, value) in row.iter() {
            match self.pivot_row.get(*col).copied().flatten() {
                Some(r) => {
                    hits = true;
                    // Pivot rows vanish on every other pivot column, so the
                    // original coefficients can be used for all of them at once.
                    let (_, pivot) = &self.rows[r];
                    for (c, x) in pivot.iter().skip(1) {
                        acc.push(*c, x.mul(value).neg());
                    }
                }
                None => acc.push(*col, value.clone()),
            }
        }
        if !hits {
            return row.clone();
        }
        acc.finish()
    }

    pub fn contains(&self, row: &SparseVec<F>) -> bool {
        self.reduce(row).is_zero()
    }

    /// Adds a row; returns whether the rank increased.
    pub fn insert(&mut self, row: &SparseVec<F>) -> bool {
        if self.is_full() {
            return false;
        }
        let reduced = self.reduce(row);
        let Some((lead, lead_val)) = reduced.leading().cloned() else {
            return false;
        };
        assert!(lead < self.ncols, "column index out of range");
        let new_row = if lead_val == F::one() {
            reduced
        } else {
            reduced.scale(&lead_val.inv())
        };
        for (_, existing) in self.rows.iter_mut() {
            if let Some(c) = existing.get(lead).cloned() {
                *existing = existing.axpy(&c.neg(), &new_row);
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push((lead, new_row));
        true
    }

    pub fn extend<'a>(&mut self, rows: impl IntoIterator<Item = &'a SparseVec<F>>)
    where
        F: 'a,
    {
        for r in rows {
            if self.is_full() {
                break;
            }
            self.insert(r);
        }
    }

    /// Stored rows sorted by pivot column.
    pub fn rows(&self) -> Vec<SparseVec<F>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r.0);
        rows.into_iter().map(|r| r.1).collect()
    }

    /// Null-space basis: one vector per free column, in increasing order,
    /// with a 1 in its free column.
    pub fn kernel_basis(&self) -> Vec<SparseVec<F>> {
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| self.pivot_row[*c].is_none())
            .collect();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, f) in free.iter().enumerate() {
            slot[*f] = k;
        }
        let mut terms: Vec<Vec<(usize, F)>> =
            free.iter().map(|f| vec![(*f, F::one())]).collect();
        for (pivot, row) in &self.rows {
            for (c, x) in row.iter().skip(1) {
                terms[slot[*c]].push((*pivot, x.neg()));
            }
        }
        terms.into_iter().map(SparseVec::from_terms).collect()
    }

    /// Coordinates of `v` with respect to the stored rows (sorted by pivot),
    /// if `v` lies in the row space.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|r| self.rows[*r].0);
        Some(order.iter().map(|r| v.value(self.rows[*r].0)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    fn row(v: &[i64]) -> SparseVec<Rational> {
        SparseVec::from_dense(&v.iter().map(|x| q(*x, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn order_independent() {
        let rows = [row(&[1, 2, 3, 4]), row(&[2, 4, 7, 1]), row(&[0, 0, 1, -7])];
        let mut a = Echelon::new(4);
        a.extend(rows.iter());
        let mut b = Echelon::new(4);
        b.extend(rows.iter().rev());
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.rank(), 2);
        assert_eq!(a.kernel_basis(), b.kernel_basis());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let rows = [row(&[1, 1, 0, 2, 0]), row(&[0, 1, 1, 0, 3]), row(&[1, 2, 1, 2, 3])];
        let mut e = Echelon::new(5);
        e.extend(rows.iter());
        let ker = e.kernel_basis();
        assert_eq!(e.rank() + ker.len(), 5);
        for k in &ker {
            for r in &rows {
                assert!(r.dot(k).is_zero());
            }
        }
    }

    #[test]
    fn coordinates_in_row_space() {
        let mut e = Echelon::new(3);
        e.insert(&row(&[1, 0, 1]));
        e.insert(&row(&[0, 1, 1]));
        let v = row(&[2, 3, 5]);
        assert_eq!(e.coordinates(&v).unwrap(), vec![q(2, 1), q(3, 1)]);
        assert!(e.coordinates(&row(&[0, 0, 1])).is_none());
    }
}
