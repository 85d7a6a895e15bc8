//! Exact construction of the exceptional tower `O → J → f₄ ⊂ e₆ ⊂ e₇ ⊂ e₈`
//! over the cyclotomic field `Q(ζ₁₂)`, with machine checks that selected
//! commuting involutions cut out maximal tori.

pub mod e7;
pub mod e8;
pub mod error;
pub mod f4e6;
pub mod jordan;
pub mod lie;
pub mod linalg;
pub mod octonion;
pub mod sample;
pub mod verify;
pub mod scalar;

pub use error::AlgebraError;
