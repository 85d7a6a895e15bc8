//! Seeded generators of exact sample values.

use rand::Rng;

use crate::jordan::CpxMatrix;
use crate::octonion::{Cpx, Octonion};
use crate::scalar::{Cyclo, Rational};

const TRIPLES: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// An element of `K` with small random rational coordinates.
pub fn cyclo<R: Rng>(rng: &mut R) -> Cyclo {
    Cyclo::from_coords(std::array::from_fn(|_| {
        if rng.gen_bool(0.5) {
            small_rational(rng)
        } else {
            Rational::zero()
        }
    }))
}

/// A Gaussian element `a + b·i` with small integer parts.
pub fn gaussian<R: Rng>(rng: &mut R) -> Cyclo {
    Cyclo::gaussian(
        Rational::from_int(rng.gen_range(-3..=3)),
        Rational::from_int(rng.gen_range(-3..=3)),
    )
}

pub fn octonion<R: Rng>(rng: &mut R) -> Octonion {
    Octonion::new(std::array::from_fn(|_| cyclo(rng)))
}

/// A rational point `(a + b e₁)/c` on the unit circle of `C`.
pub fn unit_phase<R: Rng>(rng: &mut R) -> Cpx {
    let (a, b, c) = TRIPLES[rng.gen_range(0..TRIPLES.len())];
    let (a, b) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
    let sa = if rng.gen_bool(0.5) { a } else { -a };
    let sb = if rng.gen_bool(0.5) { b } else { -b };
    Cpx::new(Cyclo::frac(sa, c), Cyclo::frac(sb, c))
}

/// A rational element of `SU(3)` over `C`: a product of plane rotations and
/// diagonal phases.
pub fn special_unitary<R: Rng>(rng: &mut R) -> CpxMatrix {
    let mut m = CpxMatrix::identity();
    for _ in 0..3 {
        let (i, j) = [(0, 1), (1, 2), (0, 2)][rng.gen_range(0..3)];
        let z = unit_phase(rng);
        let (c, s) = (Cpx::real(z.re.clone()), Cpx::real(z.im.clone()));
        let mut r = CpxMatrix::identity();
        r.0[i][i] = c.clone();
        r.0[j][j] = c;
        r.0[i][j] = -&s;
        r.0[j][i] = s;
        let p = unit_phase(rng);
        let q = unit_phase(rng);
        let d = CpxMatrix::diag([p.clone(), q.clone(), (&p * &q).conj()]);
        m = &(&m * &r) * &d;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_matrices_are_special_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            assert!(special_unitary(&mut rng).is_special_unitary());
            assert_eq!(unit_phase(&mut rng).norm(), Cyclo::one());
        }
    }
}
