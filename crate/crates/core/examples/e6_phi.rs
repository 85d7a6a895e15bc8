//! e₆, the maps φ₄ and φ₆, and σ, σ′ as their images.

use maxtori::f4e6::{compute_e6_basis, is_e6_group, phi6, torus_in, phi_identities, Component, UnitarySample};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    for c in phi_identities() {
        println!("{:20} {}  {}", c.id, c.equal, c.description);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let s = UnitarySample::random(&mut rng);
    println!("random φ₆ image in E6: {}", is_e6_group(&phi6(&s, Component::Identity)));

    let e6 = compute_e6_basis();
    println!("dim e6 = {}", e6.len());
    let t = torus_in(&e6).expect("torus");
    println!("fixed by γ, γ′, σ, σ′: dim {}, abelian {}", t.dimension, t.abelian);
}
