//! e₇ acting on the 56-dimensional space P, and the torus fixed by
//! γ, γ′, σ, σ′, ι.

use maxtori::e7::{compute_e7_basis, e7_algebra_defect, e7_torus, PInvolution, PDIM};
use maxtori::f4e6::compute_e6_basis;
use maxtori::linalg::Operator;

fn main() {
    let basis = compute_e7_basis(&compute_e6_basis());
    println!("generators: {}", basis.len());
    let bad = e7_algebra_defect(&basis).iter().filter(|d| d.is_some()).count();
    println!("generators failing membership: {bad}");
    let iota = PInvolution::Iota.operator();
    println!("ι² = −1: {}", iota.compose(&iota) == Operator::identity(PDIM).neg());
    let t = e7_torus(&basis).expect("torus");
    println!("fixed: dim {}, abelian {}, self-centralizing {}", t.dimension, t.abelian, t.self_centralizing);
}
