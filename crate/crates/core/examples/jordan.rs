//! The Albert algebra: Jordan product, cross product, trace forms.

use maxtori::jordan::{JordanElement, JordanInvolution};
use maxtori::octonion::Octonion;
use maxtori::scalar::Cyclo;

fn main() {
    let e = JordanElement::identity();
    let x = JordanElement::diagonal([Cyclo::from_int(1), Cyclo::from_int(2), Cyclo::i()]);
    let f = JordanElement::f(0, Octonion::unit(5));
    println!("tr X = {}", x.trace());
    println!("(E, E) = {}", e.bilinear(&e));
    println!("E × E = E: {}", e.cross(&e) == e);
    println!("F₁(e₅)∘F₁(e₅) = {:?}", f.jordan_mul(&f).to_kvec());
    println!("⟨X, X⟩ = {}", x.hermitian(&x));
    for g in JordanInvolution::LINEAR {
        let y = JordanElement::from_kvec(&g.apply(&f.to_kvec()));
        println!("{:8} F₁(e₅) ↦ {:?}", g.name(), y.to_kvec());
    }
}
