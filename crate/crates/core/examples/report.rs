//! Run a suite programmatically with an on-disk basis cache and print the
//! JSON report.

use maxtori::verify::{emit_report, run_suite, Format, Suite, SuiteConfig};

fn main() {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("f4").parse().expect("suite name");
    let dir = std::env::temp_dir().join("maxtori-example-cache");
    let config = SuiteConfig {
        cache_dir: Some(dir.clone()),
        format: Format::Json,
        ..SuiteConfig::new(suite)
    };
    let report = run_suite(&config);
    print!("{}", emit_report(&report, Format::Json));
    eprintln!("cache in {}; exit code {}", dir.display(), report.exit_code());
}
