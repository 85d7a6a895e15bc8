use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{E8Element, E8Map, E8_COORDS};
use crate::e7::{E7Element, PVector, ETA, PDIM, XI};
use crate::error::AlgebraError;
use crate::lie::{closure_rank, fixed_basis, LieModel, Symmetry};
use crate::linalg::{KVec, Operator, RealSpan};
use crate::scalar::Cyclo;

#[derive(Debug, Clone, Copy, Default)]
pub struct E8Model;

impl LieModel for E8Model {
    type Elem = E8Element;

    fn coord_len(&self) -> usize {
        E8_COORDS
    }

    fn coords(&self, x: &E8Element) -> KVec {
        x.coords()
    }

    fn from_coords(&self, v: &KVec) -> E8Element {
        E8Element::from_coords(v)
    }

    fn bracket(&self, x: &E8Element, y: &E8Element) -> E8Element {
        x.bracket(y)
    }
}

/// The 248 generators of the compact form: the `e₇` basis, `(0, P, −τλP, 0, 0, 0)`
/// for `P ∈ {e_k, i e_k}`, `r = i`, and `u ∈ {1, i}` with `v = −τu`.
pub fn compute_e8_basis(e7: &[E7Element]) -> Vec<E8Element> {
    let mut out: Vec<E8Element> = e7.iter().cloned().map(E8Element::from_phi).collect();
    for unit in [Cyclo::one(), Cyclo::i()] {
        for k in 0..PDIM {
            out.push(E8Element::compact_p(PVector::unit(k).scale(&unit)));
        }
    }
    out.push(E8Element::from_scalars(Cyclo::i(), Cyclo::zero(), Cyclo::zero()));
    for u in [Cyclo::one(), Cyclo::i()] {
        let v = -u.tau();
        out.push(E8Element::from_scalars(Cyclo::zero(), u, v));
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect()
}

/// First basis pair with `[a, b] + [b, a] ≠ 0`.
pub fn antisymmetry_defect(basis: &[E8Element]) -> Option<(usize, usize)> {
    pairs(basis.len())
        .into_par_iter()
        .find_first(|&(a, b)| !basis[a].bracket(&basis[b]).add(&basis[b].bracket(&basis[a])).is_zero())
}

/// First basis pair with `m[a, b] ≠ [ma, mb]`.
pub fn automorphism_defect(map: E8Map, basis: &[E8Element]) -> Option<(usize, usize)> {
    let images: Vec<E8Element> = basis.par_iter().map(|x| map.apply(x)).collect();
    pairs(basis.len())
        .into_par_iter()
        .find_first(|&(a, b)| map.apply(&basis[a].bracket(&basis[b])) != images[a].bracket(&images[b]))
}

pub type Triple = (usize, usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: Triple,
    /// First nonzero component of the Jacobi sum.
    pub component: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub checked: usize,
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn jacobi_sum(a: &E8Element, b: &E8Element, c: &E8Element) -> E8Element {
    a.bracket(b)
        .bracket(c)
        .add(&b.bracket(c).bracket(a))
        .add(&c.bracket(a).bracket(b))
}

/// `[[R₁,R₂],R₃] + [[R₂,R₃],R₁] + [[R₃,R₁],R₂]` on each listed triple of
/// `elems`. Failures are reported in the order of `triples`.
pub fn jacobi_check(elems: &[E8Element], triples: &[Triple]) -> JacobiReport {
    let failures: Vec<JacobiFailure> = triples
        .par_iter()
        .filter_map(|&(i, j, k)| {
            let component = jacobi_sum(&elems[i], &elems[j], &elems[k]).first_nonzero_component()?;
            Some(JacobiFailure {
                triple: (i, j, k),
                component,
            })
        })
        .collect();
    JacobiReport {
        checked: triples.len(),
        failures,
    }
}

/// Uniform random triples of distinct indices below `n`.
pub fn seeded_triples(n: usize, count: usize, seed: u64) -> Vec<Triple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let t = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if t.0 != t.1 && t.1 != t.2 && t.0 != t.2 {
                break t;
            }
        })
        .collect()
}

/// Elements drawn from every sector (e₆ lifts, `A`/`B` parts, `ν`, compact
/// `P` elements, `r`, `u`), together with pure `P`-only, `Q`-only and
/// scalar units of the complex algebra, and all triples of distinct ones.
pub fn sector_probes(basis: &[E8Element]) -> (Vec<E8Element>, Vec<Triple>) {
    let picks = [0, 40, 77, 80, 110, 132, 133, 165, 187, 188, 200, 245, 246, 247];
    let mut elems: Vec<E8Element> = picks.iter().filter_map(|&k| basis.get(k).cloned()).collect();
    let one = Cyclo::one;
    let zero = Cyclo::zero;
    elems.extend([
        E8Element::from_scalars(one(), zero(), zero()),
        E8Element::from_scalars(zero(), one(), zero()),
        E8Element::from_scalars(zero(), zero(), one()),
        E8Element::from_pq(PVector::unit(2), PVector::zero()),
        E8Element::from_pq(PVector::unit(XI), PVector::zero()),
        E8Element::from_pq(PVector::zero(), PVector::unit(40)),
        E8Element::from_pq(PVector::zero(), PVector::unit(ETA)),
    ]);
    let n = elems.len();
    let triples = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect();
    (elems, triples)
}

#[derive(Clone, Debug)]
pub struct FixedReport {
    pub dimension: usize,
    /// Dimensions from the reruns on shuffled copies of the basis.
    pub permuted_dimensions: Vec<usize>,
    pub closed: bool,
    pub contains_f4_torus: bool,
    pub basis: Vec<E8Element>,
}

fn sigma_symmetries() -> Vec<Symmetry<'static, E8Element>> {
    [E8Map::Sigma, E8Map::SigmaP]
        .into_iter()
        .map(|m| Symmetry::new(m.name(), move |x: &E8Element| m.apply(x)))
        .collect()
}

/// `(e₈)^{σ,σ′}`, recomputed on shuffled bases for each seed in `shuffles`.
/// `f4_torus` is checked to embed through the `e₆` lift.
pub fn fixed_sigma_sigmap(
    basis: &[E8Element],
    shuffles: &[u64],
    f4_torus: &[Operator],
) -> Result<FixedReport, AlgebraError> {
    let syms = sigma_symmetries();
    let fixed = fixed_basis(&E8Model, basis, &syms)?;
    let mut permuted_dimensions = Vec::new();
    for &seed in shuffles {
        let mut shuffled = basis.to_vec();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        permuted_dimensions.push(fixed_basis(&E8Model, &shuffled, &syms)?.len());
    }
    let closed = closure_rank(&E8Model, &fixed) == fixed.len();
    let mut span = RealSpan::new(E8_COORDS);
    for f in &fixed {
        span.insert(&f.coords());
    }
    let contains_f4_torus = f4_torus
        .iter()
        .all(|t| span.contains(&E8Element::from_phi(E7Element::from_phi(t.clone())).coords()));
    Ok(FixedReport {
        dimension: fixed.len(),
        permuted_dimensions,
        closed,
        contains_f4_torus,
        basis: fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e7::compute_e7_basis;
    use crate::f4e6::{compute_e6_basis, compute_f4_basis, torus_in};
    use crate::lie::real_rank;
    use std::time::Instant;

    #[test]
    fn e8_structure() {
        let t = Instant::now();
        let basis = compute_e8_basis(&compute_e7_basis(&compute_e6_basis()));
        assert_eq!(basis.len(), 248);
        assert!(basis.iter().all(E8Element::is_compact));
        assert_eq!(real_rank(&E8Model, &basis), 248);
        eprintln!("basis {:?}", t.elapsed());
        assert_eq!(antisymmetry_defect(&basis), None);
        eprintln!("antisymmetry {:?}", t.elapsed());
        for m in E8Map::ALL {
            assert_eq!(automorphism_defect(m, &basis), None, "{m:?}");
            eprintln!("{m:?} {:?}", t.elapsed());
        }
        let (elems, triples) = sector_probes(&basis);
        assert!(jacobi_check(&elems, &triples).passed());
        let rep = jacobi_check(&basis, &seeded_triples(248, 10_000, 0));
        assert_eq!(rep.checked, 10_000);
        assert!(rep.passed(), "{:?}", rep.failures.first());
        eprintln!("jacobi {:?}", t.elapsed());
        assert_eq!(closure_rank(&E8Model, &basis), 248);
        eprintln!("closure {:?}", t.elapsed());
        let f4_torus = torus_in(&compute_f4_basis()).unwrap().basis;
        let fixed = fixed_sigma_sigmap(&basis, &[1, 2], &f4_torus).unwrap();
        eprintln!("fixed dim {} {:?} {:?}", fixed.dimension, fixed.permuted_dimensions, t.elapsed());
        assert!(fixed.closed && fixed.contains_f4_torus);
        assert!(fixed.permuted_dimensions.iter().all(|&d| d == fixed.dimension));
    }

    #[test]
    fn seeded_triples_are_deterministic() {
        assert_eq!(seeded_triples(248, 50, 9), seeded_triples(248, 50, 9));
        assert_ne!(seeded_triples(248, 50, 9), seeded_triples(248, 50, 10));
        assert!(seeded_triples(5, 100, 0).iter().all(|&(a, b, c)| a != b && b != c && a != c));
    }
}
