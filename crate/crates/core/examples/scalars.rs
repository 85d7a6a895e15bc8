//! Arithmetic in Q(ζ₁₂): the complexification unit, √3 and complex conjugation.

use maxtori::scalar::{Cyclo, Rational};

fn main() {
    let i = Cyclo::i();
    let s3 = Cyclo::sqrt3();
    let w = Cyclo::omega();
    println!("i² = {}", &i * &i);
    println!("√3² = {}", &s3 * &s3);
    println!("ω³ = {}", &(&w * &w) * &w);
    let z: Cyclo = "1/2 + 3/4·z + 0·z^2 + -1·z^3".parse().expect("parse");
    println!("z = {z}, τz = {}, z·τz real: {}", z.tau(), (&z * &z.tau()).is_real());
    println!("1/z = {}", z.inv().unwrap());
    let big = (0..6).fold(Rational::new(2, 3), |acc, _| &acc * &acc);
    println!("(2/3)^64 = {big}");
}
