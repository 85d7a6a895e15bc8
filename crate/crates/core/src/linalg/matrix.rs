use super::echelon::Echelon;
use super::sparse::SparseVec;
use crate::error::AlgebraError;
use crate::scalar::{Cyclo, Rational};

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(AlgebraError::DimensionMismatch {
                    expected: c,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(MatrixQ {
            rows: r,
            cols: c,
            entries,
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| Rational::from_int(*x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> SparseVec<Rational> {
        SparseVec::from_dense(&self.entries[r * self.cols..(r + 1) * self.cols])
    }

    fn echelon(&self) -> Echelon<Rational> {
        let mut e = Echelon::new(self.cols);
        for r in 0..self.rows {
            if e.is_full() {
                break;
            }
            e.insert(&self.row(r));
        }
        e
    }

    /// Deterministic null-space basis (one vector per free column).
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.echelon()
            .kernel_basis()
            .iter()
            .map(|v| v.to_dense(self.cols))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += &(a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }
}

/// How a matrix over `K` is expanded to a rational matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flatten {
    /// Each entry becomes the row segment of its four power-basis coordinates.
    Coordinates,
    /// Each entry `a` becomes the 4×4 rational matrix of `x ↦ a·x`, so a
    /// `K`-linear system in `n` unknowns becomes a `Q`-linear one in `4n`.
    KLinear,
}

/// Rational 4×4 matrix of a `Q`-linear map `K → K` in the power basis.
pub fn q_linear_matrix(f: impl Fn(&Cyclo) -> Cyclo) -> MatrixQ {
    let mut m = MatrixQ::zeros(4, 4);
    for j in 0..4 {
        let mut e: [Rational; 4] = Default::default();
        e[j] = Rational::one();
        let img = f(&Cyclo::from_coords(e));
        for (i, c) in img.coords().iter().enumerate() {
            m.set(i, j, c.clone());
        }
    }
    m
}

pub fn flatten_field(m: &[Vec<Cyclo>], mode: Flatten) -> MatrixQ {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    match mode {
        Flatten::Coordinates => {
            let mut out = MatrixQ::zeros(rows, 4 * cols);
            for (r, row) in m.iter().enumerate() {
                for (c, a) in row.iter().enumerate() {
                    for (k, x) in a.coords().iter().enumerate() {
                        out.set(r, 4 * c + k, x.clone());
                    }
                }
            }
            out
        }
        Flatten::KLinear => {
            let mut out = MatrixQ::zeros(4 * rows, 4 * cols);
            for (r, row) in m.iter().enumerate() {
                for (c, a) in row.iter().enumerate() {
                    let block = q_linear_matrix(|x| a * x);
                    for i in 0..4 {
                        for j in 0..4 {
                            out.set(4 * r + i, 4 * c + j, block.get(i, j).clone());
                        }
                    }
                }
            }
            out
        }
    }
}
