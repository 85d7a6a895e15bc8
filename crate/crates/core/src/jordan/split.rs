//! The split form `J^C = (J_C)^C ⊕ M(3, C)^C` with `C = span{1, e₁}`.

use std::ops::{Add, Mul, Sub};

use super::JordanElement;
use crate::error::AlgebraError;
use crate::octonion::{embed_c3, split_c3, Cpx, Octonion};
use crate::scalar::Cyclo;

/// A 3×3 matrix over `C ⊗ K`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CpxMatrix(pub [[Cpx; 3]; 3]);

impl CpxMatrix {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::diag([Cpx::one(), Cpx::one(), Cpx::one()])
    }

    pub fn diag(d: [Cpx; 3]) -> Self {
        let mut m = Self::zero();
        for (k, v) in d.into_iter().enumerate() {
            m.0[k][k] = v;
        }
        m
    }

    /// Real diagonal matrix with integer entries, e.g. `E_{1,−1} = diag(1, −1, −1)`.
    pub fn diag_ints(d: [i64; 3]) -> Self {
        Self::diag(d.map(|x| Cpx::from_ints(x, 0)))
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Cpx) -> Self {
        CpxMatrix(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn get(&self, i: usize, j: usize) -> &Cpx {
        &self.0[i][j]
    }

    pub fn column(&self, j: usize) -> [Cpx; 3] {
        std::array::from_fn(|i| self.0[i][j].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    /// Conjugate transpose in `e₁`.
    pub fn star(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    /// Entrywise conjugation in `e₁`.
    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].conj())
    }

    /// Entrywise complex conjugation `τ` of the coefficients.
    pub fn tau(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].tau())
    }

    pub fn scale(&self, c: &Cpx) -> Self {
        Self::from_fn(|i, j| c * &self.0[i][j])
    }

    pub fn scale_k(&self, c: &Cyclo) -> Self {
        Self::from_fn(|i, j| self.0[i][j].scale(c))
    }

    /// Multiplication by `i·e₁`, the mixed unit appearing in `h(A, B)`.
    pub fn mul_i_e1(&self) -> Self {
        let i = Cyclo::i();
        Self::from_fn(|r, c| {
            let z = &self.0[r][c];
            Cpx::new(-(&i * &z.im), &i * &z.re)
        })
    }

    pub fn det(&self) -> Cpx {
        let m = &self.0;
        let minor = |a: usize, b: usize, c: usize, d: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][c] * &m[2][d]);
        let t0 = &m[0][0] * &minor(1, 2, 2, 1);
        let t1 = &m[0][1] * &minor(0, 2, 2, 0);
        let t2 = &m[0][2] * &minor(0, 1, 1, 0);
        &(&t0 - &t1) + &t2
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.star()
    }

    /// `A A* = E` and `det A = 1`.
    pub fn is_special_unitary(&self) -> bool {
        self * &self.star() == Self::identity() && self.det() == Cpx::one()
    }

    /// `h(A, B) = (A + B)/2 + i(A − B)/2 e₁`.
    pub fn h(a: &CpxMatrix, b: &CpxMatrix) -> CpxMatrix {
        let half = Cyclo::frac(1, 2);
        let sum = (a + b).scale_k(&half);
        let diff = (a - b).scale_k(&half);
        &sum + &diff.mul_i_e1()
    }
}

impl Add for &CpxMatrix {
    type Output = CpxMatrix;
    fn add(self, o: &CpxMatrix) -> CpxMatrix {
        CpxMatrix::from_fn(|i, j| &self.0[i][j] + &o.0[i][j])
    }
}

impl Sub for &CpxMatrix {
    type Output = CpxMatrix;
    fn sub(self, o: &CpxMatrix) -> CpxMatrix {
        CpxMatrix::from_fn(|i, j| &self.0[i][j] - &o.0[i][j])
    }
}

impl Mul for &CpxMatrix {
    type Output = CpxMatrix;
    fn mul(self, o: &CpxMatrix) -> CpxMatrix {
        CpxMatrix::from_fn(|i, k| {
            let mut acc = Cpx::zero();
            for j in 0..3 {
                let (a, b) = (&self.0[i][j], &o.0[j][k]);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }
}

/// `X + M` with `X` Hermitian (in `e₁`) and `M` arbitrary, whose columns
/// `m₁, m₂, m₃` live in the octonion slots `x₁, x₂, x₃`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SplitElement {
    pub x: CpxMatrix,
    pub m: CpxMatrix,
}

/// Position of the `C`-part of `xᵢ` in the Hermitian matrix.
const SLOTS: [(usize, usize); 3] = [(1, 2), (2, 0), (0, 1)];

impl SplitElement {
    pub fn new(x: CpxMatrix, m: CpxMatrix) -> Result<Self, AlgebraError> {
        if !x.is_hermitian() {
            return Err(AlgebraError::Parse("X is not Hermitian".into()));
        }
        Ok(SplitElement { x, m })
    }

    pub fn to_jordan(&self) -> JordanElement {
        split_iso(self)
    }

    pub fn from_jordan(j: &JordanElement) -> Self {
        let mut x = CpxMatrix::zero();
        let mut m = CpxMatrix::zero();
        for i in 0..3 {
            x.0[i][i] = Cpx::real(j.xi[i].clone());
            let (a, n) = split_c3(&j.x[i]);
            let (r, c) = SLOTS[i];
            x.0[c][r] = a.conj();
            x.0[r][c] = a;
            for (row, v) in n.into_iter().enumerate() {
                m.0[row][i] = v;
            }
        }
        SplitElement { x, m }
    }
}

/// `X + M ↦` the Jordan element with `xᵢ = aᵢ + embed_c3(column i of M)`,
/// `aᵢ` the off-diagonal entries of `X` at `(2,3)`, `(3,1)`, `(1,2)`.
pub fn split_iso(s: &SplitElement) -> JordanElement {
    let xi = [0, 1, 2].map(|i| s.x.0[i][i].re.clone());
    let x: [Octonion; 3] = std::array::from_fn(|i| {
        let (r, c) = SLOTS[i];
        &Octonion::from_cpx(&s.x.0[r][c]) + &embed_c3(&s.m.column(i))
    });
    JordanElement { xi, x }
}
