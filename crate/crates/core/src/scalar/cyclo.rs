//! The cyclotomic field `K = Q(ζ)`, `ζ = e^{2πi/12}`, stored in the power
//! basis `1, ζ, ζ², ζ³` modulo `ζ⁴ = ζ² − 1`.
//!
//! `K` contains the complexification unit `i = ζ³`, `√3 = 2ζ − ζ³` and the
//! cube root of unity `ω = ζ⁴ = ζ² − 1`. Complex conjugation `τ` is the
//! automorphism `ζ ↦ ζ⁻¹`; its fixed field `Q(√3)` plays the role of the reals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::rational::Rational;
use crate::error::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyclo {
    c: [Rational; 4],
}

/// Named constants of `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constant {
    One,
    I,
    Sqrt3,
    Omega,
}

impl FromStr for Constant {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "one" => Ok(Constant::One),
            "i" => Ok(Constant::I),
            "sqrt3" => Ok(Constant::Sqrt3),
            "omega" => Ok(Constant::Omega),
            other => Err(AlgebraError::UnknownName(other.to_string())),
        }
    }
}

impl Cyclo {
    pub const fn from_coords(c: [Rational; 4]) -> Self {
        Cyclo { c }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclo {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    /// `a/b`.
    pub fn frac(a: i64, b: i64) -> Self {
        Self::from_rational(Rational::new(a, b))
    }

    pub fn i() -> Self {
        Self::constant(Constant::I)
    }

    pub fn sqrt3() -> Self {
        Self::constant(Constant::Sqrt3)
    }

    pub fn omega() -> Self {
        Self::constant(Constant::Omega)
    }

    /// `a + b·i` with rational parts.
    pub fn gaussian(a: Rational, b: Rational) -> Self {
        Cyclo {
            c: [a, Rational::zero(), Rational::zero(), b],
        }
    }

    pub fn constant(name: Constant) -> Self {
        let z = Rational::zero;
        let n = Rational::from_int;
        match name {
            Constant::One => Self::one(),
            Constant::I => Cyclo { c: [z(), z(), z(), n(1)] },
            Constant::Sqrt3 => Cyclo { c: [z(), n(2), z(), n(-1)] },
            Constant::Omega => Cyclo { c: [n(-1), z(), n(1), z()] },
        }
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.c[1..]
            .iter()
            .all(Rational::is_zero)
            .then_some(&self.c[0])
    }

    /// Whether the element lies in `Q(i)` (no `ζ`, `ζ²` component).
    #[inline]
    pub fn is_gaussian(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero()
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹ = ζ − ζ³`.
    pub fn tau(&self) -> Self {
        let [c0, c1, c2, c3] = &self.c;
        if c1.is_zero() && c2.is_zero() {
            return Cyclo {
                c: [c0.clone(), Rational::zero(), Rational::zero(), -c3],
            };
        }
        Cyclo {
            c: [c0 + c2, c1.clone(), -c2, -(c1 + c3)],
        }
    }

    pub fn is_real(&self) -> bool {
        self.tau() == *self
    }

    /// `(a + τa)/2`, an element of the real subfield.
    pub fn re(&self) -> Self {
        if self.is_gaussian() {
            return Self::from_rational(self.c[0].clone());
        }
        (self + &self.tau()).scale(&Rational::new(1, 2))
    }

    /// `(a − τa)/(2i)`, an element of the real subfield.
    pub fn im(&self) -> Self {
        if self.is_gaussian() {
            return Self::from_rational(self.c[3].clone());
        }
        // 1/(2i) = −i/2
        &(self - &self.tau()) * &Cyclo::gaussian(Rational::zero(), Rational::new(-1, 2))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclo {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r],
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        // Fast paths for rational and Gaussian operands, which dominate.
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        if self.is_gaussian() && other.is_gaussian() {
            let (a, b) = (&self.c[0], &self.c[3]);
            let (c, d) = (&other.c[0], &other.c[3]);
            return Cyclo::gaussian(&(a * c) - &(b * d), &(a * d) + &(b * c));
        }
        let mut p: [Rational; 7] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += &(a * b);
                }
            }
        }
        // ζ⁶ = −1, ζ⁵ = ζ³ − ζ, ζ⁴ = ζ² − 1
        let [mut c0, mut c1, mut c2, mut c3, c4, c5, c6] = p;
        c0 -= &c6;
        c3 += &c5;
        c1 -= &c5;
        c2 += &c4;
        c0 -= &c4;
        Cyclo { c: [c0, c1, c2, c3] }
    }

    /// Inverse via the extended Euclidean algorithm in `Q[x]` modulo
    /// `x⁴ − x² + 1`.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.inv()?));
        }
        let modulus = vec![
            Rational::one(),
            Rational::zero(),
            Rational::from_int(-1),
            Rational::zero(),
            Rational::one(),
        ];
        let a = poly_trim(self.c.to_vec());
        // Invariant: s_k · a ≡ r_k (mod modulus).
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while r1.len() != 1 {
            let (quot, rem) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd has positive degree; impossible for an irreducible modulus.
                return Err(AlgebraError::DivisionByZero);
            }
        }
        let lead_inv = r1[0].inv()?;
        let mut out: [Rational; 4] = Default::default();
        for (k, coef) in s1.iter().enumerate() {
            out[k] = coef * &lead_inv;
        }
        Ok(Cyclo { c: out })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerical value as `(re, im)`, for diagnostics only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.c.iter().enumerate() {
            let angle = std::f64::consts::PI * k as f64 / 6.0;
            re += c.to_f64() * angle.cos();
            im += c.to_f64() * angle.sin();
        }
        (re, im)
    }
}

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            match b.get(k) {
                Some(y) => &x - y,
                None => x,
            }
        })
        .collect();
    poly_trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    poly_trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero divisor");
    if rem.len() < b.len() {
        return (Vec::new(), poly_trim(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let coef = &rem[k + db] * &lead_inv;
        if coef.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &(&coef * y);
        }
        quot[k] = coef;
    }
    rem.truncate(db);
    (poly_trim(quot), poly_trim(rem))
}

impl From<Rational> for Cyclo {
    fn from(r: Rational) -> Self {
        Cyclo::from_rational(r)
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Cyclo::from_int(n)
    }
}

impl Add<&Cyclo> for &Cyclo {
    type Output = Cyclo;
    fn add(self, o: &Cyclo) -> Cyclo {
        Cyclo {
            c: [
                &self.c[0] + &o.c[0],
                &self.c[1] + &o.c[1],
                &self.c[2] + &o.c[2],
                &self.c[3] + &o.c[3],
            ],
        }
    }
}

impl Sub<&Cyclo> for &Cyclo {
    type Output = Cyclo;
    fn sub(self, o: &Cyclo) -> Cyclo {
        Cyclo {
            c: [
                &self.c[0] - &o.c[0],
                &self.c[1] - &o.c[1],
                &self.c[2] - &o.c[2],
                &self.c[3] - &o.c[3],
            ],
        }
    }
}

impl Mul<&Cyclo> for &Cyclo {
    type Output = Cyclo;
    #[inline]
    fn mul(self, o: &Cyclo) -> Cyclo {
        self.mul_ref(o)
    }
}

impl Div<&Cyclo> for &Cyclo {
    type Output = Cyclo;
    fn div(self, o: &Cyclo) -> Cyclo {
        self.mul_ref(&o.inv().expect("division by zero in K"))
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, o: Cyclo) -> Cyclo {
                (&self).$method(&o)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, o: &Cyclo) -> Cyclo {
                (&self).$method(o)
            }
        }
        impl $tr<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, o: Cyclo) -> Cyclo {
                self.$method(&o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, o: &Cyclo) {
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, o: &Cyclo) {
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

/// Canonical rendering `a + b·z + c·z^2 + d·z^3`, all four terms present.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.c;
        write!(f, "{a} + {b}·z + {c}·z^2 + {d}·z^3")
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclo {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(s.to_string());
        let parts: Vec<&str> = s.split(" + ").collect();
        let [p0, p1, p2, p3] = parts.as_slice() else {
            return Err(bad());
        };
        let strip = |p: &str, suffix: &str| -> Result<Rational, AlgebraError> {
            p.strip_suffix(suffix).ok_or_else(bad)?.parse()
        };
        Ok(Cyclo {
            c: [
                p0.parse()?,
                strip(p1, "·z")?,
                strip(p2, "·z^2")?,
                strip(p3, "·z^3")?,
            ],
        })
    }
}

impl serde::Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
