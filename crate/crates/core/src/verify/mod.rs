//! Verification suites over the whole tower, with JSON and text reports
//! and an on-disk basis cache.

mod cache;
mod report;
mod suites;
mod tower;

pub use cache::{BasisCache, CacheOutcome, CACHE_VERSION};
pub use report::{emit_report, Check, Report, Status, Totals, REPORT_VERSION};
pub use suites::run_suite;
pub use tower::{convention_fingerprint, Tower};

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::AlgebraError;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "MAXTORI_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Octonion,
    G2,
    F4,
    E6,
    E7,
    E8,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["octonion", "g2", "f4", "e6", "e7", "e8", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Octonion => "octonion",
            Suite::G2 => "g2",
            Suite::F4 => "f4",
            Suite::E6 => "e6",
            Suite::E7 => "e7",
            Suite::E8 => "e8",
            Suite::All => "all",
        }
    }

    /// The suites run, in dependency order.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Octonion, Suite::G2, Suite::F4, Suite::E6, Suite::E7, Suite::E8],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "octonion" => Suite::Octonion,
            "g2" => Suite::G2,
            "f4" => Suite::F4,
            "e6" => Suite::E6,
            "e7" => Suite::E7,
            "e8" => Suite::E8,
            "all" => Suite::All,
            other => return Err(AlgebraError::UnknownName(other.into())),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(AlgebraError::UnknownName(other.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub jacobi_samples: usize,
    pub seed: u64,
    /// Worker threads; `None` uses the rayon default.
    pub parallelism: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub format: Format,
    /// Jacobi on every basis triple instead of the sampled set.
    pub exhaustive: bool,
    /// Record per-check wall time. Off by default so reports are
    /// reproducible byte for byte.
    pub timings: bool,
    /// Run the octonion checks against a table with one reversed triple.
    pub corrupt_octonion_table: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            jacobi_samples: 10_000,
            seed: 0,
            parallelism: None,
            cache_dir: None,
            format: Format::Text,
            exhaustive: false,
            timings: false,
            corrupt_octonion_table: false,
        }
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self::new(Suite::All)
    }
}
