use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::report::{Check, Report, Status};
use super::tower::{convention_fingerprint, Tower};
use super::{Suite, SuiteConfig};
use crate::e7::{
    e7_algebra_defect, is_e7_group, lambda, lambda_inverse, lambda_twist_holds, e7_torus, E7Model, PInvolution, PDIM,
};
use crate::e8::{
    antisymmetry_defect, automorphism_defect, fixed_sigma_sigmap, jacobi_check, sector_probes, seeded_triples,
    E8Element, E8Map, E8Model, Triple,
};
use crate::f4e6::{e6_complement, f4_group_defect, is_e6_algebra, torus_in, phi_identities};
use crate::jordan::{JordanInvolution, JDIM};
use crate::lie::{closure_rank, real_rank, FixedSubalgebra, OperatorAlgebra};
use crate::linalg::Operator;
use crate::octonion::{derivation_algebra, g2_torus, MulTable};
use crate::sample;
use crate::scalar::Cyclo;

struct Runner {
    checks: Vec<Check>,
    timings: bool,
}

/// What a check computed: the value compared against `expected`, and an
/// optional pointer to the offending element.
struct Outcome {
    actual: Value,
    detail: Option<String>,
}

impl Outcome {
    fn of(actual: impl Into<Value>) -> Self {
        Outcome {
            actual: actual.into(),
            detail: None,
        }
    }

    fn with(actual: impl Into<Value>, detail: Option<String>) -> Self {
        Outcome {
            actual: actual.into(),
            detail,
        }
    }
}

impl Runner {
    fn push(&mut self, id: &str, tag: &str, description: &str, expected: Value, f: impl FnOnce() -> (Outcome, bool)) {
        let start = Instant::now();
        let (out, ok) = f();
        let millis = self.timings.then(|| start.elapsed().as_millis() as u64);
        self.checks.push(Check {
            id: id.into(),
            description: description.into(),
            paper_tag: tag.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected,
            actual: out.actual,
            millis,
            detail: if ok { None } else { out.detail },
        });
    }

    /// Passes iff the computed value equals `expected`.
    fn expect(&mut self, id: &str, tag: &str, description: &str, expected: impl Into<Value>, f: impl FnOnce() -> Outcome) {
        let expected = expected.into();
        let e = expected.clone();
        self.push(id, tag, description, expected, move || {
            let out = f();
            let ok = out.actual == e;
            (out, ok)
        });
    }

    fn expect_true(&mut self, id: &str, tag: &str, description: &str, f: impl FnOnce() -> (bool, Option<String>)) {
        self.expect(id, tag, description, true, || {
            let (ok, detail) = f();
            Outcome::with(ok, detail)
        });
    }

    /// A computed value with no target; the returned flag decides the status.
    fn record(&mut self, id: &str, tag: &str, description: &str, f: impl FnOnce() -> (Value, bool)) {
        self.push(id, tag, description, Value::Null, || {
            let (v, ok) = f();
            (Outcome::of(v), ok)
        });
    }

    fn torus(&mut self, prefix: &str, tag: &str, what: &str, dim: usize, t: Result<FixedSubalgebra<impl Clone>, crate::AlgebraError>) {
        match t {
            Ok(t) => {
                self.expect(&format!("{prefix}_dimension"), tag, &format!("dimension of {what}"), dim, || Outcome::of(t.dimension));
                self.expect_true(&format!("{prefix}_abelian"), tag, &format!("{what} is abelian"), || (t.abelian, None));
                self.expect_true(&format!("{prefix}_self_centralizing"), tag, &format!("{what} is its own centralizer"), || {
                    (t.self_centralizing, None)
                });
                self.expect_true(&format!("{prefix}_pointwise_fixed"), tag, &format!("{what} is fixed pointwise"), || {
                    (t.pointwise_fixed, None)
                });
            }
            Err(e) => self.expect(&format!("{prefix}_dimension"), tag, &format!("dimension of {what}"), dim, || {
                Outcome::with(Value::Null, Some(e.to_string()))
            }),
        }
    }
}

fn first<T: std::fmt::Debug>(what: &str, x: Option<T>) -> (bool, Option<String>) {
    (x.is_none(), x.map(|v| format!("{what} {v:?}")))
}

fn octonion_suite(r: &mut Runner, config: &SuiteConfig) {
    let table = if config.corrupt_octonion_table {
        MulTable::corrupted()
    } else {
        MulTable::standard().clone()
    };
    let triples: Vec<[usize; 3]> = table.triples().iter().map(|&(a, b, c)| [a, b, c]).collect();
    r.record("octonion_table", "Octonions", "oriented triples (a, b, c) with e_a e_b = e_c", || (json!(triples), true));
    r.expect_true("octonion_alternativity", "Octonions", "(xx)y = x(xy) and (yx)x = y(xx) on all basis triples", || {
        first("basis triple", table.alternativity_defect())
    });
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    r.expect("octonion_norm_multiplicative", "Octonions", "N(xy) = N(x)N(y) on seeded samples", 100, || {
        let mut good = 0;
        let mut bad = None;
        for k in 0..100 {
            let (x, y) = (sample::octonion(&mut rng), sample::octonion(&mut rng));
            if table.mul(&x, &y).norm() == &x.norm() * &y.norm() {
                good += 1;
            } else if bad.is_none() {
                bad = Some(format!("sample {k}"));
            }
        }
        Outcome::with(good, bad)
    });
    r.expect_true("octonion_pinned_products", "Octonions", "e1e2 = e3, e1e4 = e5, e1e6 = e7", || (table.pinned_products_hold(), None));
}

fn g2_suite(r: &mut Runner) {
    let table = MulTable::standard();
    r.expect("g2_derivation_dim", "G2 warm-up", "dimension of der(O)", 14, || Outcome::of(derivation_algebra(table).len()));
    match g2_torus(table) {
        Ok(t) => {
            r.expect("g2_fixed_dim", "G2 warm-up", "dimension of der(O) fixed by γ, γ′", 2, || Outcome::of(t.dimension));
            r.expect_true("g2_fixed_abelian", "G2 warm-up", "fixed algebra is abelian", || (t.abelian, None));
            r.expect_true("g2_fixed_self_centralizing", "G2 warm-up", "fixed algebra is its own centralizer", || {
                (t.self_centralizing, None)
            });
        }
        Err(e) => r.expect("g2_fixed_dim", "G2 warm-up", "dimension of der(O) fixed by γ, γ′", 2, || {
            Outcome::with(Value::Null, Some(e.to_string()))
        }),
    }
}

fn f4_suite(r: &mut Runner, tower: &Tower) {
    let invs = JordanInvolution::LINEAR;
    for inv in invs {
        let op = inv.operator().expect("linear");
        r.expect_true(
            &format!("f4_member_{}", inv.name()),
            "F4 involutions",
            &format!("{} preserves X × Y on all basis pairs", inv.name()),
            || first("basis pair", f4_group_defect(&op)),
        );
    }
    let ops: Vec<(JordanInvolution, Operator)> = invs.iter().map(|i| (*i, i.operator().expect("linear"))).collect();
    let id = Operator::identity(JDIM);
    r.expect_true("f4_involutions_square_identity", "F4 involutions", "each involution squares to the identity", || {
        let bad = ops.iter().find(|(_, s)| s.compose(s) != id);
        (bad.is_none(), bad.map(|(n, _)| n.name().to_string()))
    });
    r.expect_true("f4_involutions_commute", "F4 involutions", "the involutions commute pairwise", || {
        let bad = ops
            .iter()
            .flat_map(|a| ops.iter().map(move |b| (a, b)))
            .find(|((_, x), (_, y))| !x.commutator(y).is_zero());
        (bad.is_none(), bad.map(|((a, _), (b, _))| format!("{} {}", a.name(), b.name())))
    });
    let model = OperatorAlgebra { dim: JDIM };
    r.expect("f4_basis_dim", "f4", "dimension of the derivation kernel", 52, || Outcome::of(tower.f4().len()));
    r.expect("f4_closure_rank", "f4", "rank of the basis together with all brackets", 52, || {
        Outcome::of(closure_rank(&model, tower.f4()))
    });
    for c in phi_identities().into_iter().filter(|c| c.id.starts_with("phi4_")) {
        r.expect_true(c.id, "Lemma 2.2", c.description, || first("basis element", c.first_difference));
    }
    r.torus("f4_torus", "Theorem 2.3", "f4 fixed by γ, γ′, σ, σ′", 4, torus_in(tower.f4()));
}

fn e6_suite(r: &mut Runner, tower: &Tower) {
    let model = OperatorAlgebra { dim: JDIM };
    r.expect("e6_basis_dim", "e6", "real dimension of the compact e6 kernel", 78, || Outcome::of(tower.e6().len()));
    r.expect_true("e6_members", "e6", "every basis element satisfies the e6 conditions", || {
        first("basis element", tower.e6().iter().position(|x| !is_e6_algebra(x)))
    });
    r.expect("e6_contains_f4", "e6", "rank of e6 together with f4", 78, || {
        let mut all = tower.e6().to_vec();
        all.extend(tower.f4().iter().cloned());
        Outcome::of(real_rank(&model, &all))
    });
    r.expect("e6_constructive_rank", "e6", "rank of f4 together with i·Ã for trace-free A", 78, || {
        let mut all = tower.f4().to_vec();
        all.extend(e6_complement());
        Outcome::of(real_rank(&model, &all))
    });
    r.expect("e6_closure_rank", "e6", "rank of the basis together with all brackets", 78, || {
        Outcome::of(closure_rank(&model, tower.e6()))
    });
    for c in phi_identities().into_iter().filter(|c| c.id.starts_with("phi6_")) {
        r.expect_true(c.id, "Lemma 3.2", c.description, || first("basis element", c.first_difference));
    }
    r.torus("e6_torus", "Theorem 3.3", "e6 fixed by γ, γ′, σ, σ′", 6, torus_in(tower.e6()));
}

fn e7_suite(r: &mut Runner, tower: &Tower) {
    let basis = tower.e7();
    r.expect("e7_basis_dim", "e7", "real rank of the compact e7 generators", 133, || Outcome::of(real_rank(&E7Model, basis)));
    r.expect("e7_membership", "e7", "basis elements satisfying [Φ, P×Q] = ΦP×Q + P×ΦQ and ⟨ΦP,Q⟩ + ⟨P,ΦQ⟩ = 0", 133, || {
        let defects = e7_algebra_defect(basis);
        let bad = defects.iter().enumerate().find_map(|(k, d)| d.map(|p| format!("basis element {k} at pair {p:?}")));
        Outcome::with(defects.iter().filter(|d| d.is_none()).count(), bad)
    });
    r.expect_true("e7_compact", "e7", "basis elements have B = −τA, ν ∈ iR, φ ∈ e6", || {
        first("basis element", basis.iter().position(|x| !x.is_compact()))
    });
    r.expect_true("iota_squared", "Theorem 4.3", "ι² = −1 on P", || {
        let i = PInvolution::Iota.operator();
        (i.compose(&i) == Operator::identity(PDIM).neg(), None)
    });
    let five = [PInvolution::Gamma, PInvolution::GammaP, PInvolution::Sigma, PInvolution::SigmaP, PInvolution::Iota];
    r.expect_true("p_involutions_commute", "Theorem 4.3", "γ, γ′, σ, σ′, ι commute pairwise on P", || {
        let bad = five
            .iter()
            .flat_map(|a| five.iter().map(move |b| (*a, *b)))
            .find(|(a, b)| !a.operator().commutator(&b.operator()).is_zero());
        (bad.is_none(), bad.map(|(a, b)| format!("{} {}", a.name(), b.name())))
    });
    r.expect_true("p_involutions_in_e7", "Theorem 4.3", "γ, γ′, γ₁, σ, σ′, ι and λ preserve P × Q and ⟨,⟩", || {
        let bad = PInvolution::ALL.iter().find(|s| !is_e7_group(&s.operator(), &s.inverse()));
        if let Some(s) = bad {
            return (false, Some(s.name().into()));
        }
        (is_e7_group(&lambda(), &lambda_inverse()), Some("lambda".into()))
    });
    r.expect("lambda_twist", "λ-conjugation", "basis elements with λΦλ⁻¹ = Φ(−ᵗφ, −B, −A, −ν)", 133, || {
        let bad = basis.iter().position(|x| !lambda_twist_holds(x));
        Outcome::with(basis.iter().filter(|x| lambda_twist_holds(x)).count(), bad.map(|k| format!("basis element {k}")))
    });
    r.expect("e7_closure_rank", "e7", "rank of the basis together with all brackets", 133, || {
        Outcome::of(closure_rank(&E7Model, basis))
    });
    r.torus("e7_torus", "Theorem 4.3", "e7 fixed by γ, γ′, σ, σ′, ι", 7, e7_torus(basis));
}

fn all_triples(n: usize) -> Vec<Triple> {
    (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect()
}

fn jacobi_outcome(elems: &[E8Element], triples: &[Triple]) -> Outcome {
    let rep = jacobi_check(elems, triples);
    let detail = rep
        .failures
        .first()
        .map(|f| format!("triple {:?}, component {}", f.triple, f.component));
    Outcome::with(rep.failures.len(), detail)
}

fn e8_suite(r: &mut Runner, tower: &Tower, config: &SuiteConfig) {
    let basis = tower.e8();
    r.expect("e8_basis_dim", "e8", "real rank of the compact e8 generators", 248, || Outcome::of(real_rank(&E8Model, basis)));
    r.expect_true("e8_basis_compact", "e8", "basis elements have the form (Φ, P, −τλP, r, u, −τu)", || {
        first("basis element", basis.iter().position(|x| !x.is_compact()))
    });
    r.expect_true("e8_scalar_sl2", "e8", "[r,u] = 2u, [u,v] = r, [r,v] = −2v on unit scalars", || {
        let (o, z) = (Cyclo::one, Cyclo::zero);
        let s = |r: Cyclo, u: Cyclo, v: Cyclo| E8Element::from_scalars(r, u, v);
        let (er, eu, ev) = (s(o(), z(), z()), s(z(), o(), z()), s(z(), z(), o()));
        let ok = er.bracket(&eu) == eu.scale(&Cyclo::from_int(2))
            && eu.bracket(&ev) == er
            && er.bracket(&ev) == ev.scale(&Cyclo::from_int(-2));
        (ok, None)
    });
    r.expect_true("e8_antisymmetry", "e8", "[a,b] + [b,a] = 0 on all basis pairs", || {
        first("basis pair", antisymmetry_defect(basis))
    });
    let (probes, sector) = sector_probes(basis);
    r.expect("e8_jacobi_sectors", "e8", &format!("Jacobi failures on the {} sector-covering triples", sector.len()), 0, || {
        jacobi_outcome(&probes, &sector)
    });
    if config.exhaustive {
        let triples = all_triples(basis.len());
        r.expect("e8_jacobi_exhaustive", "e8", &format!("Jacobi failures on all {} basis triples", triples.len()), 0, || {
            jacobi_outcome(basis, &triples)
        });
    } else {
        let n = config.jacobi_samples;
        let triples = seeded_triples(basis.len(), n, config.seed);
        r.expect(
            "e8_jacobi_samples",
            "e8",
            &format!("Jacobi failures on {n} seeded basis triples (seed {})", config.seed),
            0,
            || jacobi_outcome(basis, &triples),
        );
    }
    for m in E8Map::ALL {
        let desc = if m.is_conjugate_linear() {
            format!("{} is a conjugate-linear bracket automorphism on basis pairs", m.name())
        } else {
            format!("{} is a bracket automorphism on basis pairs", m.name())
        };
        r.expect_true(&format!("e8_automorphism_{}", m.name()), "e8", &desc, || {
            first("basis pair", automorphism_defect(m, basis))
        });
    }
    r.expect_true("e8_involutive", "e8", "σ² = σ′² = λ̃² = 1 on the basis", || {
        let maps = [E8Map::Sigma, E8Map::SigmaP, E8Map::LambdaTilde];
        let bad = maps
            .iter()
            .find_map(|m| basis.iter().position(|x| m.apply(&m.apply(x)) != *x).map(|k| format!("{} on basis element {k}", m.name())));
        (bad.is_none(), bad)
    });
    r.expect_true("e8_tau_lambda_commute", "e8", "τλ̃ = λ̃τ on the basis", || {
        let t = E8Map::Tau;
        let l = E8Map::LambdaTilde;
        first("basis element", basis.iter().position(|x| t.apply(&l.apply(x)) != l.apply(&t.apply(x))))
    });
    r.expect("e8_closure_rank", "e8", "rank of the basis together with all brackets", 248, || {
        Outcome::of(closure_rank(&E8Model, basis))
    });

    let shuffles = [config.seed.wrapping_add(1), config.seed.wrapping_add(2)];
    let f4_torus = torus_in(tower.f4()).map(|t| t.basis).unwrap_or_default();
    match fixed_sigma_sigmap(basis, &shuffles, &f4_torus) {
        Ok(fx) => {
            let stable = fx.permuted_dimensions.iter().all(|&d| d == fx.dimension);
            r.record("e8_fixed_sigma_sigmap_dimension", "e8 fixed points", "dimension of e8 fixed by σ, σ′", || {
                (json!(fx.dimension), stable)
            });
            r.expect(
                "e8_fixed_sigma_sigmap_permuted",
                "e8 fixed points",
                "dimensions recomputed on two shuffled basis orderings",
                json!([fx.dimension, fx.dimension]),
                || Outcome::of(json!(fx.permuted_dimensions)),
            );
            r.expect_true("e8_fixed_sigma_sigmap_closed", "e8 fixed points", "fixed subalgebra is closed under the bracket", || {
                (fx.closed, None)
            });
            r.expect_true("e8_fixed_contains_f4_torus", "e8 fixed points", "the f4 torus lifts into the fixed subalgebra", || {
                (fx.contains_f4_torus, None)
            });
        }
        Err(e) => r.record("e8_fixed_sigma_sigmap_dimension", "e8 fixed points", "dimension of e8 fixed by σ, σ′", || {
            (json!(e.to_string()), false)
        }),
    }
}

/// Runs the configured suites in dependency order and assembles the report.
pub fn run_suite(config: &SuiteConfig) -> Report {
    let run = || {
        let tower = Tower::new(config.cache_dir.clone());
        let mut r = Runner {
            checks: Vec::new(),
            timings: config.timings,
        };
        for suite in config.suite.expand() {
            match suite {
                Suite::Octonion => octonion_suite(&mut r, config),
                Suite::G2 => g2_suite(&mut r),
                Suite::F4 => f4_suite(&mut r, &tower),
                Suite::E6 => e6_suite(&mut r, &tower),
                Suite::E7 => e7_suite(&mut r, &tower),
                Suite::E8 => e8_suite(&mut r, &tower, config),
                Suite::All => unreachable!("expanded"),
            }
        }
        Report::new(config.suite.name(), &convention_fingerprint(), r.checks)
    };
    match config.parallelism {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        None => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonion_and_g2_pass() {
        let rep = run_suite(&SuiteConfig::new(Suite::Octonion));
        assert!(rep.passed(), "{rep:?}");
        let rep = run_suite(&SuiteConfig::new(Suite::G2));
        assert_eq!(rep.check("g2_fixed_dim").unwrap().actual, json!(2));
        assert!(rep.passed());
    }

    #[test]
    fn corrupted_table_fails() {
        let mut c = SuiteConfig::new(Suite::Octonion);
        c.corrupt_octonion_table = true;
        let rep = run_suite(&c);
        let alt = rep.check("octonion_alternativity").unwrap();
        assert_eq!(alt.status, Status::Fail);
        assert!(alt.detail.is_some());
        assert_eq!(rep.exit_code(), 1);
    }

    #[test]
    fn f4_report() {
        let rep = run_suite(&SuiteConfig::new(Suite::F4));
        let c = rep.check("f4_torus_dimension").unwrap();
        assert_eq!((c.expected.clone(), c.status), (json!(4), Status::Pass));
        assert!(rep.passed(), "{:?}", rep.checks.iter().filter(|c| c.status == Status::Fail).collect::<Vec<_>>());
    }
}
