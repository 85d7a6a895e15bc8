//! `e₈^C = e₇^C ⊕ P^C ⊕ P^C ⊕ C ⊕ C ⊕ C` with its explicit bracket, the
//! compact real form, the involutions `σ, σ′, λ̃, τ` and the Jacobi and
//! fixed-subalgebra computations.

mod basis;
mod element;
mod maps;

pub use basis::{
    antisymmetry_defect, automorphism_defect, compute_e8_basis, fixed_sigma_sigmap, jacobi_check, sector_probes,
    seeded_triples, E8Model, FixedReport, JacobiFailure, JacobiReport, Triple,
};
pub use element::{compact_partner, E8Element, E8_COORDS};
pub use maps::E8Map;
