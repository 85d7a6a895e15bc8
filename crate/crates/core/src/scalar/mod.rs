//! Exact scalars: `Q` and the cyclotomic field `K = Q(ζ)`, `ζ` a primitive
//! 12th root of unity.

mod cyclo;
mod rational;

pub use cyclo::{Constant, Cyclo};
pub use rational::{q, Rational};

/// The operations the elimination engine needs from a coefficient field.
pub trait Field: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; callers guarantee `self != 0`.
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    #[inline]
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    #[inline]
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    #[inline]
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    #[inline]
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        Rational::inv(self).expect("inverse of zero")
    }
}

impl Field for Cyclo {
    fn zero() -> Self {
        Cyclo::zero()
    }
    fn one() -> Self {
        Cyclo::one()
    }
    #[inline]
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    #[inline]
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    #[inline]
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    #[inline]
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        Cyclo::inv(self).expect("inverse of zero")
    }
}
