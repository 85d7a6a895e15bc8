use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use maxtori::verify::{emit_report, run_suite, Format, Suite, SuiteConfig, CACHE_DIR_ENV};

/// Run exact verification suites over the octonion / Albert algebra / e8 tower.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// octonion, g2, f4, e6, e7, e8 or all
    #[arg(value_parser = parse::<Suite>)]
    suite: Suite,
    /// Number of seeded random basis triples for the e8 Jacobi check.
    #[arg(long, default_value_t = 10_000)]
    jacobi_samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// text or json
    #[arg(long, default_value = "text", value_parser = parse::<Format>)]
    format: Format,
    /// Worker threads.
    #[arg(long)]
    parallel: Option<usize>,
    /// Directory for cached bases.
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Check Jacobi on every basis triple of e8.
    #[arg(long)]
    exhaustive: bool,
    /// Record per-check wall time in the report.
    #[arg(long)]
    timings: bool,
    #[arg(long, hide = true)]
    corrupt_octonion_table: bool,
}

fn parse<T: std::str::FromStr<Err = maxtori::AlgebraError>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: maxtori::AlgebraError| e.to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = SuiteConfig {
        suite: args.suite,
        jacobi_samples: args.jacobi_samples,
        seed: args.seed,
        parallelism: args.parallel,
        cache_dir: args.cache_dir,
        format: args.format,
        exhaustive: args.exhaustive,
        timings: args.timings,
        corrupt_octonion_table: args.corrupt_octonion_table,
    };
    let report = run_suite(&config);
    print!("{}", emit_report(&report, config.format));
    ExitCode::from(report.exit_code() as u8)
}
