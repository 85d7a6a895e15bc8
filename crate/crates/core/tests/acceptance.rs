//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use maxtori::verify::{emit_report, run_suite, Format, Report, Status, Suite, SuiteConfig};

struct Criterion {
    label: &'static str,
    suites: &'static [Suite],
    selects: fn(&str) -> bool,
    // Number of checks the criterion must find, so a renamed id cannot
    // silently drop out.
    expected_checks: usize,
    limit: Duration,
}

const MIN: u64 = 60;

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            label: "octonions: alternativity, norm multiplicativity, pinned products",
            suites: &[Suite::Octonion],
            selects: |id| {
                matches!(id, "octonion_alternativity" | "octonion_norm_multiplicative" | "octonion_pinned_products")
            },
            expected_checks: 3,
            limit: Duration::from_secs(5),
        },
        Criterion {
            label: "g2: der(O) has dimension 14, {γ, γ′}-fixed part is a 2-torus",
            suites: &[Suite::G2],
            selects: |id| id.starts_with("g2_"),
            expected_checks: 4,
            limit: Duration::from_secs(30),
        },
        Criterion {
            label: "F4 membership of γ, γ′, γ₁, σ, σ′; involutive; commuting",
            suites: &[Suite::F4],
            selects: |id| id.starts_with("f4_member_") || id.starts_with("f4_involutions_"),
            expected_checks: 7,
            limit: Duration::from_secs(30),
        },
        Criterion {
            label: "f4 basis of dimension 52, closed under the bracket",
            suites: &[Suite::F4],
            selects: |id| matches!(id, "f4_basis_dim" | "f4_closure_rank"),
            expected_checks: 2,
            limit: Duration::from_secs(10 * MIN),
        },
        Criterion {
            label: "σ, σ′ as φ₄ and φ₆ images; ω kernel elements",
            suites: &[Suite::F4, Suite::E6],
            selects: |id| id.starts_with("phi4_") || id.starts_with("phi6_"),
            expected_checks: 6,
            limit: Duration::from_secs(10),
        },
        Criterion {
            label: "fixed tori of f4, e6, e7 of dimensions 4, 6, 7",
            suites: &[Suite::F4, Suite::E6, Suite::E7],
            selects: |id| id.contains("_torus_") || id == "e6_basis_dim" || id == "e7_basis_dim",
            expected_checks: 14,
            limit: Duration::from_secs(15 * MIN),
        },
        Criterion {
            label: "e7: membership, ι² = −1, commuting involutions, λ-twist",
            suites: &[Suite::E7],
            selects: |id| {
                matches!(id, "e7_membership" | "iota_squared" | "p_involutions_commute" | "lambda_twist")
            },
            expected_checks: 4,
            limit: Duration::from_secs(10 * MIN),
        },
        Criterion {
            label: "e8: compact basis, antisymmetry, Jacobi, automorphisms, scalar sl2",
            suites: &[Suite::E8],
            selects: |id| {
                matches!(
                    id,
                    "e8_basis_dim"
                        | "e8_basis_compact"
                        | "e8_antisymmetry"
                        | "e8_jacobi_sectors"
                        | "e8_jacobi_samples"
                        | "e8_automorphism_sigma"
                        | "e8_automorphism_sigma_p"
                        | "e8_automorphism_lambda_tilde"
                        | "e8_scalar_sl2"
                )
            },
            expected_checks: 9,
            limit: Duration::from_secs(30 * MIN),
        },
        Criterion {
            label: "e8 fixed by σ, σ′: dimension stable under reordering, closed",
            suites: &[Suite::E8],
            selects: |id| {
                matches!(
                    id,
                    "e8_fixed_sigma_sigmap_dimension" | "e8_fixed_sigma_sigmap_permuted" | "e8_fixed_sigma_sigmap_closed"
                )
            },
            expected_checks: 3,
            limit: Duration::from_secs(30 * MIN),
        },
    ]
}

fn line(n: usize, ok: bool, label: &str, note: &str) {
    println!("{} criterion {n:>2}  {label}  ({note})", if ok { "PASS" } else { "FAIL" });
}

fn main() -> ExitCode {
    let cache = tempfile::tempdir().expect("temp dir");
    let base = SuiteConfig {
        cache_dir: Some(cache.path().to_path_buf()),
        ..SuiteConfig::new(Suite::All)
    };

    // Each criterion is charged the full wall time of the suites it reads,
    // basis construction included.
    let mut reports: BTreeMap<Suite, (Report, Duration)> = BTreeMap::new();
    for suite in Suite::All.expand() {
        let start = Instant::now();
        let report = run_suite(&SuiteConfig { suite, ..base.clone() });
        reports.insert(suite, (report, start.elapsed()));
    }

    let mut all_ok = true;
    for (k, c) in criteria().iter().enumerate() {
        let mut found = 0;
        let mut failed = Vec::new();
        let mut elapsed = Duration::ZERO;
        for s in c.suites {
            let (report, t) = &reports[s];
            elapsed += *t;
            for check in report.checks.iter().filter(|x| (c.selects)(&x.id)) {
                found += 1;
                if check.status != Status::Pass {
                    failed.push(check.id.clone());
                }
            }
        }
        let in_time = elapsed <= c.limit;
        let ok = failed.is_empty() && found == c.expected_checks && in_time;
        let mut note = format!("{found} checks, {:.1} s", elapsed.as_secs_f64());
        if !failed.is_empty() {
            note.push_str(&format!(", failed: {}", failed.join(" ")));
        }
        if found != c.expected_checks {
            note.push_str(&format!(", expected {} checks", c.expected_checks));
        }
        if !in_time {
            note.push_str(&format!(", over the {} s limit", c.limit.as_secs()));
        }
        if k == 8 {
            if let Some(d) = reports[&Suite::E8].0.check("e8_fixed_sigma_sigmap_dimension") {
                note.push_str(&format!(", dimension {}", d.actual));
            }
        }
        line(k + 1, ok, c.label, &note);
        all_ok &= ok;
    }

    // Two full runs with one config; the second reads the cache the first wrote.
    let fresh = tempfile::tempdir().expect("temp dir");
    let config = SuiteConfig {
        cache_dir: Some(fresh.path().to_path_buf()),
        format: Format::Json,
        ..SuiteConfig::new(Suite::All)
    };
    let first = emit_report(&run_suite(&config), Format::Json);
    let second = emit_report(&run_suite(&config), Format::Json);
    let same = first == second;
    line(10, same, "identical JSON reports from identical configs", &format!("{} bytes", first.len()));
    all_ok &= same;

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
