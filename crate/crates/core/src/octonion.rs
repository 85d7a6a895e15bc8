//! Octonions over `K` with a pinned multiplication table, the embedding
//! `C³ ↪ O` used by the split form of the Albert algebra, and the `G₂`-level
//! involutions and derivation algebra.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::AlgebraError;
use crate::lie::{fixed_subalgebra, FixedSubalgebra, OperatorAlgebra, Symmetry};
use crate::linalg::{Echelon, KVec, Operator, SparseVec};
use crate::scalar::{Cyclo, Rational};

/// Oriented Fano triples `(a, b, c)` meaning `e_a e_b = e_c`.
pub const STANDARD_TRIPLES: [(usize, usize, usize); 7] =
    [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (5, 2, 7), (4, 3, 7), (5, 3, 6)];

/// Signed products `e_a e_b = ±e_c` on the basis `1, e₁, …, e₇`.
#[derive(Clone, PartialEq, Eq)]
pub struct MulTable {
    prod: [[(i8, u8); 8]; 8],
    triples: Vec<(usize, usize, usize)>,
}

impl fmt::Debug for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("MulTable").field(&self.triples).finish()
    }
}

impl MulTable {
    /// Builds the table from seven oriented triples covering each pair of
    /// imaginary units exactly once.
    pub fn from_triples(triples: &[(usize, usize, usize)]) -> Result<Self, AlgebraError> {
        let mut prod = [[(0i8, 0u8); 8]; 8];
        for k in 0..8 {
            prod[0][k] = (1, k as u8);
            prod[k][0] = (1, k as u8);
        }
        for k in 1..8 {
            prod[k][k] = (-1, 0);
        }
        for &(a, b, c) in triples {
            if [a, b, c].iter().any(|&x| x == 0 || x > 7) || a == b || b == c || a == c {
                return Err(AlgebraError::Parse(format!("bad triple ({a},{b},{c})")));
            }
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                if prod[x][y].0 != 0 {
                    return Err(AlgebraError::Parse(format!("pair ({x},{y}) covered twice")));
                }
                prod[x][y] = (1, z as u8);
                prod[y][x] = (-1, z as u8);
            }
        }
        if (1..8).any(|a| (1..8).any(|b| prod[a][b].0 == 0)) {
            return Err(AlgebraError::Parse("triples do not cover every pair".into()));
        }
        Ok(MulTable {
            prod,
            triples: triples.to_vec(),
        })
    }

    pub fn standard() -> &'static MulTable {
        static TABLE: OnceLock<MulTable> = OnceLock::new();
        TABLE.get_or_init(|| MulTable::from_triples(&STANDARD_TRIPLES).expect("standard table"))
    }

    /// The standard table with the last triple reversed: still a valid
    /// sign pattern, but not alternative.
    pub fn corrupted() -> MulTable {
        let mut t = STANDARD_TRIPLES;
        let (a, b, c) = t[6];
        t[6] = (b, a, c);
        MulTable::from_triples(&t).expect("corrupted table")
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    /// `e_a e_b = sign · e_index`.
    #[inline]
    pub fn product(&self, a: usize, b: usize) -> (i8, usize) {
        let (s, k) = self.prod[a][b];
        (s, k as usize)
    }

    /// Signed index table for `1 ≤ a, b ≤ 7`: entry `±c` for `e_a e_b = ±e_c`
    /// (`−0` is written as `0`, meaning `−1`).
    pub fn signed_table(&self) -> Vec<Vec<i8>> {
        (1..8)
            .map(|a| {
                (1..8)
                    .map(|b| {
                        let (s, c) = self.product(a, b);
                        s * c as i8
                    })
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, x: &Octonion, y: &Octonion) -> Octonion {
        let mut out: [Cyclo; 8] = Default::default();
        for (a, xa) in x.c.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.c.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let (s, k) = self.product(a, b);
                let p = xa * yb;
                if s > 0 {
                    out[k] += &p;
                } else {
                    out[k] -= &p;
                }
            }
        }
        Octonion { c: out }
    }

    fn basis_mul(&self, a: usize, b: usize) -> Octonion {
        let (s, k) = self.product(a, b);
        Octonion::unit(k).scale_int(s as i64)
    }

    /// First basis triple whose associator is not alternating, if any.
    /// Checks `[x,y,z] + [y,x,z] = 0` and `[x,y,z] + [x,z,y] = 0`, the
    /// linearized form of `x(xy) = x²y` and `(yx)x = yx²`.
    pub fn alternativity_defect(&self) -> Option<(usize, usize, usize)> {
        let assoc = |a: usize, b: usize, c: usize| {
            let left = self.mul(&self.basis_mul(a, b), &Octonion::unit(c));
            let right = self.mul(&Octonion::unit(a), &self.basis_mul(b, c));
            &left - &right
        };
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    let abc = assoc(a, b, c);
                    if !(&abc + &assoc(b, a, c)).is_zero() || !(&abc + &assoc(a, c, b)).is_zero() {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `e₁e₂ = e₃`, `e₁e₄ = e₅`, `e₁e₆ = e₇`, `e₂e₄ = e₆`.
    pub fn pinned_products_hold(&self) -> bool {
        [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6)]
            .iter()
            .all(|&(a, b, c)| self.product(a, b) == (1, c))
    }
}

/// An element `re + im·e₁` of the subalgebra `C = span{1, e₁}` with
/// coefficients in `K`. `e₁` is not the complexification unit `i ∈ K`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Cpx {
    pub re: Cyclo,
    pub im: Cyclo,
}

impl Cpx {
    pub fn new(re: Cyclo, im: Cyclo) -> Self {
        Cpx { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Cpx::real(Cyclo::one())
    }

    pub fn e1() -> Self {
        Cpx::new(Cyclo::zero(), Cyclo::one())
    }

    pub fn real(re: Cyclo) -> Self {
        Cpx { re, im: Cyclo::zero() }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Cpx::new(Cyclo::from_int(re), Cyclo::from_int(im))
    }

    /// `ω₁ = −1/2 + (√3/2)e₁`.
    pub fn omega1() -> Self {
        Cpx::new(Cyclo::frac(-1, 2), Cyclo::sqrt3().scale(&Rational::new(1, 2)))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Conjugation in `e₁`.
    pub fn conj(&self) -> Self {
        Cpx::new(self.re.clone(), -&self.im)
    }

    /// Conjugation in the complexification unit, coefficientwise.
    pub fn tau(&self) -> Self {
        Cpx::new(self.re.tau(), self.im.tau())
    }

    /// `z·z̄ = re² + im²`.
    pub fn norm(&self) -> Cyclo {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        Cpx::new(&self.re * c, &self.im * c)
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        let n = self.norm().inv()?;
        Ok(self.conj().scale(&n))
    }
}

impl Add for &Cpx {
    type Output = Cpx;
    fn add(self, o: &Cpx) -> Cpx {
        Cpx::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Cpx {
    type Output = Cpx;
    fn sub(self, o: &Cpx) -> Cpx {
        Cpx::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Cpx {
    type Output = Cpx;
    fn mul(self, o: &Cpx) -> Cpx {
        Cpx::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}

impl Neg for &Cpx {
    type Output = Cpx;
    fn neg(self) -> Cpx {
        Cpx::new(-&self.re, -&self.im)
    }
}

/// `x₀ + x₁e₁ + … + x₇e₇` with `xₖ ∈ K`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Octonion {
    c: [Cyclo; 8],
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| format!("({x})e{k}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Octonion {
    pub fn new(c: [Cyclo; 8]) -> Self {
        Octonion { c }
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Octonion {
            c: c.map(Cyclo::from_int),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::unit(0)
    }

    pub fn unit(k: usize) -> Self {
        let mut c: [Cyclo; 8] = Default::default();
        c[k] = Cyclo::one();
        Octonion { c }
    }

    pub fn scalar(x: Cyclo) -> Self {
        let mut c: [Cyclo; 8] = Default::default();
        c[0] = x;
        Octonion { c }
    }

    pub fn from_cpx(z: &Cpx) -> Self {
        let mut c: [Cyclo; 8] = Default::default();
        c[0] = z.re.clone();
        c[1] = z.im.clone();
        Octonion { c }
    }

    pub fn coords(&self) -> &[Cyclo; 8] {
        &self.c
    }

    pub fn coord(&self, k: usize) -> &Cyclo {
        &self.c[k]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Cyclo::is_zero)
    }

    pub fn conj(&self) -> Self {
        let mut c = self.c.clone();
        for x in c.iter_mut().skip(1) {
            *x = -&*x;
        }
        Octonion { c }
    }

    /// `N(x) = Σ xₖ²`, so that `x x̄ = N(x)·1`.
    pub fn norm(&self) -> Cyclo {
        self.inner(self)
    }

    /// The polarized norm form `(x, y) = Σ xₖ yₖ`.
    pub fn inner(&self, other: &Octonion) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (a, b) in self.c.iter().zip(&other.c) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    pub fn tau(&self) -> Self {
        Octonion {
            c: self.c.clone().map(|x| x.tau()),
        }
    }

    pub fn scale(&self, s: &Cyclo) -> Self {
        Octonion {
            c: self.c.clone().map(|x| &x * s),
        }
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self.scale(&Cyclo::from_int(s))
    }

    pub fn to_kvec(&self) -> KVec {
        SparseVec::from_dense(&self.c)
    }

    pub fn from_kvec(v: &KVec) -> Self {
        let mut c: [Cyclo; 8] = Default::default();
        for (k, x) in v.iter() {
            c[*k] = x.clone();
        }
        Octonion { c }
    }

    /// Applies a linear operator on `O` written in the basis `1, e₁, …, e₇`.
    pub fn apply(op: &Operator, x: &Octonion) -> Octonion {
        Octonion::from_kvec(&op.apply(&x.to_kvec()))
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, o: &Octonion) -> Octonion {
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(&o.c) {
            *x += y;
        }
        Octonion { c }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, o: &Octonion) -> Octonion {
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(&o.c) {
            *x -= y;
        }
        Octonion { c }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            c: self.c.clone().map(|x| -x),
        }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, o: &Octonion) -> Octonion {
        MulTable::standard().mul(self, o)
    }
}

/// `n₁e₂ + n₂e₄ + n₃e₆`, where `(a + b e₁)e₂ = a e₂ + b e₃` and likewise for
/// `e₄`, `e₆`.
pub fn embed_c3(n: &[Cpx; 3]) -> Octonion {
    let mut c: [Cyclo; 8] = Default::default();
    for (j, z) in n.iter().enumerate() {
        c[2 + 2 * j] = z.re.clone();
        c[3 + 2 * j] = z.im.clone();
    }
    Octonion { c }
}

/// Splits `x = a + embed_c3(n)` with `a ∈ C`.
pub fn split_c3(x: &Octonion) -> (Cpx, [Cpx; 3]) {
    let c = &x.c;
    let pair = |k: usize| Cpx::new(c[k].clone(), c[k + 1].clone());
    (pair(0), [pair(2), pair(4), pair(6)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G2Involution {
    /// Fixes `1, e₁, e₂, e₃`; negates `e₄, …, e₇`.
    Gamma,
    /// Fixes `1, e₁, e₄, e₅`; negates `e₂, e₃, e₆, e₇`.
    GammaP,
}

impl FromStr for G2Involution {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gamma" => Ok(G2Involution::Gamma),
            "gamma_p" => Ok(G2Involution::GammaP),
            other => Err(AlgebraError::UnknownName(other.into())),
        }
    }
}

impl G2Involution {
    /// Sign on each basis vector `1, e₁, …, e₇`.
    pub fn signs(self) -> [i64; 8] {
        match self {
            G2Involution::Gamma => [1, 1, 1, 1, -1, -1, -1, -1],
            G2Involution::GammaP => [1, 1, -1, -1, 1, 1, -1, -1],
        }
    }

    pub fn operator(self) -> Operator {
        Operator::diagonal(&self.signs().map(Cyclo::from_int))
    }
}

/// Whether `op(e_a e_b) = op(e_a) op(e_b)` for all basis pairs.
pub fn is_automorphism(op: &Operator, table: &MulTable) -> bool {
    let img: Vec<Octonion> = (0..8).map(|k| Octonion::from_kvec(op.column(k))).collect();
    (0..8).all(|a| {
        (0..8).all(|b| {
            let (s, k) = table.product(a, b);
            let lhs = img[k].scale_int(s as i64);
            lhs == table.mul(&img[a], &img[b])
        })
    })
}

/// Basis of `der(O) = {δ : δ(xy) = δ(x)y + xδ(y)}` as operators on `O`.
pub fn derivation_algebra(table: &MulTable) -> Vec<Operator> {
    // Unknown d_{ij} (coefficient of e_i in δe_j) sits at index 8j + i.
    let mut ech = Echelon::<Rational>::new(64);
    let r = |s: i8| Rational::from_int(s as i64);
    for a in 0..8 {
        for b in 0..8 {
            let (s, c) = table.product(a, b);
            for k in 0..8 {
                let mut terms = vec![(8 * c + k, r(s))];
                for i in 0..8 {
                    let (s1, t1) = table.product(i, b);
                    if t1 == k {
                        terms.push((8 * a + i, -r(s1)));
                    }
                    let (s2, t2) = table.product(a, i);
                    if t2 == k {
                        terms.push((8 * b + i, -r(s2)));
                    }
                }
                ech.insert(&SparseVec::from_terms(terms));
            }
        }
    }
    ech.kernel_basis()
        .iter()
        .map(|v| Operator::from_coords(8, &SparseVec::from_rational(v)))
        .collect()
}

/// Whether `(δx, y) + (x, δy) = 0` for the norm form on the basis.
pub fn is_norm_skew(delta: &Operator) -> bool {
    (0..8).all(|a| (0..8).all(|b| (&delta.entry(b, a) + &delta.entry(a, b)).is_zero()))
}

/// The subalgebra of `g₂` commuting with `γ` and `γ′`.
pub fn g2_torus(table: &MulTable) -> Result<FixedSubalgebra<Operator>, AlgebraError> {
    let g2 = derivation_algebra(table);
    let syms: Vec<Symmetry<'_, Operator>> = [G2Involution::Gamma, G2Involution::GammaP]
        .iter()
        .map(|g| {
            let op = g.operator();
            Symmetry::conjugation(format!("{g:?}"), op.clone(), op)
        })
        .collect();
    fixed_subalgebra(&OperatorAlgebra { dim: 8 }, &g2, &syms)
}
