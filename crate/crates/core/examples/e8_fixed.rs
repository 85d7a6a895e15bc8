//! The subalgebra of e₈ fixed by σ and σ′. Its dimension is computed, then
//! recomputed on two shuffled copies of the basis.

use maxtori::e7::compute_e7_basis;
use maxtori::e8::{compute_e8_basis, fixed_sigma_sigmap};
use maxtori::f4e6::{compute_e6_basis, compute_f4_basis, torus_in};

fn main() {
    let basis = compute_e8_basis(&compute_e7_basis(&compute_e6_basis()));
    let f4_torus = torus_in(&compute_f4_basis()).expect("f4 torus").basis;
    let r = fixed_sigma_sigmap(&basis, &[1, 2], &f4_torus).expect("fixed subalgebra");
    println!("dimension {}", r.dimension);
    println!("shuffled reruns {:?}", r.permuted_dimensions);
    println!("closed {}", r.closed);
    println!("contains the f4 torus {}", r.contains_f4_torus);
}
