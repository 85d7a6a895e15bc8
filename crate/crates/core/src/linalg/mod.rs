//! Deterministic exact linear algebra: sparse vectors, incremental reduced
//! echelon forms, kernels, ranks and materialized operators.

mod echelon;
mod matrix;
mod operator;
mod real;
mod sparse;

pub use echelon::Echelon;
pub use matrix::{flatten_field, q_linear_matrix, Flatten, MatrixQ};
pub use operator::Operator;
pub use real::{real_kernel_of_columns, realify, split_equation, RealEchelon, RealSpan};
pub use sparse::{Combiner, SparseVec};

/// Vector over `K`.
pub type KVec = SparseVec<crate::scalar::Cyclo>;
