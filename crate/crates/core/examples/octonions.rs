//! The octonion table, its derivation algebra g₂, and the 2-torus cut out
//! by γ and γ′.

use maxtori::octonion::{derivation_algebra, g2_torus, MulTable, Octonion};

fn main() {
    let t = MulTable::standard();
    println!("triples: {:?}", t.triples());
    let (e1, e2) = (Octonion::unit(1), Octonion::unit(2));
    println!("e1 e2 = {:?}", t.mul(&e1, &e2));
    println!("e2 e1 = {:?}", t.mul(&e2, &e1));
    println!("alternative: {}", t.alternativity_defect().is_none());
    println!("corrupted table alternative: {:?}", MulTable::corrupted().alternativity_defect());

    println!("dim der(O) = {}", derivation_algebra(t).len());
    let torus = g2_torus(t).expect("fixed subalgebra");
    println!(
        "fixed by γ, γ′: dim {}, abelian {}, self-centralizing {}",
        torus.dimension, torus.abelian, torus.self_centralizing
    );
}
