use crate::jordan::{basis_cross, gram, mult_operator, JDIM};
use crate::linalg::{Combiner, Echelon, KVec, Operator, RealEchelon, SparseVec};
use crate::scalar::{Cyclo, Rational};

const N: usize = JDIM * JDIM;

/// Unknown `φ_{ij}` (coefficient of `e_i` in `φe_j`).
fn var(i: usize, j: usize) -> usize {
    j * JDIM + i
}

/// Per component `k`, the terms of `φe_a × e_b + e_a × φe_b` in the
/// unknowns of `φ`, each scaled by `c`, with variables offset by `shift`.
fn derivation_terms(a: usize, b: usize, c: &Cyclo, shift: usize, rows: &mut [Vec<(usize, Cyclo)>]) {
    for i in 0..JDIM {
        for (k, v) in basis_cross(i, b).iter() {
            rows[*k].push((shift + var(i, a), v * c));
        }
        for (k, v) in basis_cross(a, i).iter() {
            rows[*k].push((shift + var(i, b), v * c));
        }
    }
}

/// Basis of `f₄ = {δ : δ(X × Y) = δX × Y + X × δY}` on the real form `J`.
pub fn compute_f4_basis() -> Vec<Operator> {
    let mut ech = Echelon::<Rational>::new(N);
    for a in 0..JDIM {
        for b in a..JDIM {
            let mut rows: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); JDIM];
            derivation_terms(a, b, &Cyclo::one(), 0, &mut rows);
            for (m, v) in basis_cross(a, b).iter() {
                for (k, row) in rows.iter_mut().enumerate() {
                    row.push((var(k, *m), -v));
                }
            }
            for row in rows {
                let row = SparseVec::from_terms(row);
                ech.insert(&row.to_rational().expect("rational system"));
            }
        }
    }
    ech.kernel_basis()
        .iter()
        .map(|v| Operator::from_coords(JDIM, &SparseVec::from_rational(v)))
        .collect()
}

/// Basis of the compact `e₆` on `J^C`: operators `φ = φ_R + iφ_I` with real
/// `φ_R, φ_I` satisfying `φX × Y + X × φY = τφτ(X × Y)` and
/// `⟨φX, Y⟩ + ⟨X, φY⟩ = 0`.
pub fn compute_e6_basis() -> Vec<Operator> {
    let i = Cyclo::i();
    let one = Cyclo::one();
    let mut ech = RealEchelon::new(2 * N);
    for a in 0..JDIM {
        for b in a..JDIM {
            let mut rows: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); JDIM];
            derivation_terms(a, b, &one, 0, &mut rows);
            derivation_terms(a, b, &i, N, &mut rows);
            // τφτ(Z) = (φ_R − iφ_I)Z for real Z
            for (m, v) in basis_cross(a, b).iter() {
                for (k, row) in rows.iter_mut().enumerate() {
                    row.push((var(k, *m), -v));
                    row.push((N + var(k, *m), v * &i));
                }
            }
            for row in rows {
                ech.insert_equation(&SparseVec::from_terms(row));
            }
        }
    }
    let g = gram();
    for a in 0..JDIM {
        for b in a..JDIM {
            // ⟨φe_a, e_b⟩ + ⟨e_a, φe_b⟩ = g_b τ(φ_{ba}) + g_a φ_{ab}
            let gb = Cyclo::from_rational(g[b].clone());
            let ga = Cyclo::from_rational(g[a].clone());
            let row = SparseVec::from_terms(vec![
                (var(b, a), gb.clone()),
                (N + var(b, a), -(&gb * &i)),
                (var(a, b), ga.clone()),
                (N + var(a, b), &ga * &i),
            ]);
            ech.insert_equation(&row);
        }
    }
    ech.kernel_basis()
        .iter()
        .map(|v| {
            let re = v.slice(0, N);
            let im = v.slice(N, 2 * N);
            let mut acc = Combiner::new();
            acc.add_vec(&re);
            acc.add_scaled(&i, &im);
            Operator::from_coords(JDIM, &acc.finish())
        })
        .collect()
}

/// `i·Ã` for `A` running over a basis of the trace-free real form: the
/// part of `e₆` complementary to `f₄`.
pub fn e6_complement() -> Vec<Operator> {
    let i = Cyclo::i();
    let mut elems: Vec<KVec> = vec![
        SparseVec::from_dense(&[Cyclo::one(), -Cyclo::one(), Cyclo::zero()]),
        SparseVec::from_dense(&[Cyclo::zero(), Cyclo::one(), -Cyclo::one()]),
    ];
    elems.extend((3..JDIM).map(SparseVec::unit));
    elems.iter().map(|a| mult_operator(a).scale(&i)).collect()
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;
    use crate::jordan::identity;
    use crate::lie::{closure_rank, real_rank, OperatorAlgebra};

    #[test]
    fn f4_and_e6() {
        let t = std::time::Instant::now();
        let f4 = compute_f4_basis();
        eprintln!("f4 {:?}", t.elapsed());
        assert_eq!(f4.len(), 52);
        let e = identity();
        for d in &f4 {
            assert!(d.apply(&e).is_zero());
        }
        let model = OperatorAlgebra { dim: JDIM };
        assert_eq!(closure_rank(&model, &f4), 52);
        eprintln!("f4 closure {:?}", t.elapsed());
        let e6 = compute_e6_basis();
        eprintln!("e6 {:?}", t.elapsed());
        assert_eq!(e6.len(), 78);
        assert!(e6.iter().all(is_e6_algebra));
        let mut all = e6.clone();
        all.extend(f4.iter().cloned());
        assert_eq!(real_rank(&model, &all), 78);
        let mut constructive = f4.clone();
        constructive.extend(e6_complement());
        all.extend(e6_complement());
        assert_eq!(real_rank(&model, &constructive), 78);
        assert_eq!(real_rank(&model, &all), 78);
        assert!(!is_e6_algebra(&mult_operator(&e).scale(&Cyclo::i())));
        let t23 = torus_in(&f4).unwrap();
        assert_eq!((t23.dimension, t23.abelian, t23.self_centralizing), (4, true, true));
        let t33 = torus_in(&e6).unwrap();
        assert_eq!((t33.dimension, t33.abelian, t33.self_centralizing), (6, true, true));
        eprintln!("tori {:?}", t.elapsed());
    }
}
