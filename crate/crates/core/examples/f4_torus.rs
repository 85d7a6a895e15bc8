//! The 52-dimensional f₄ and the fixed subalgebra of γ, γ′, σ, σ′.

use maxtori::f4e6::{compute_f4_basis, torus_in};
use maxtori::lie::{closure_rank, OperatorAlgebra};

fn main() {
    let f4 = compute_f4_basis();
    println!("dim f4 = {}", f4.len());
    println!("closure rank = {}", closure_rank(&OperatorAlgebra { dim: 27 }, &f4));
    let t = torus_in(&f4).expect("torus");
    println!("fixed: dim {}, abelian {}, self-centralizing {}", t.dimension, t.abelian, t.self_centralizing);
}
