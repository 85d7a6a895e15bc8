use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::linalg::{KVec, Operator, SparseVec};
use crate::scalar::Cyclo;

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    fingerprint: String,
    name: String,
    dim: usize,
    /// Sparse coordinates of each operator, values as exact strings.
    elements: Vec<Vec<(usize, Cyclo)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Miss,
    /// A file existed but was unreadable or stale; it was recomputed.
    Recomputed,
}

/// On-disk store of operator bases, keyed by name and convention fingerprint.
#[derive(Debug, Clone)]
pub struct BasisCache {
    dir: PathBuf,
    fingerprint: String,
}

impl BasisCache {
    pub fn new(dir: impl Into<PathBuf>, fingerprint: impl Into<String>) -> Self {
        BasisCache {
            dir: dir.into(),
            fingerprint: fingerprint.into(),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, name: &str) -> PathBuf {
        let short = &self.fingerprint[..self.fingerprint.len().min(16)];
        self.dir.join(format!("{name}-{short}.json"))
    }

    pub fn save(&self, name: &str, dim: usize, basis: &[Operator]) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let file = CacheFile {
            version: CACHE_VERSION,
            fingerprint: self.fingerprint.clone(),
            name: name.into(),
            dim,
            elements: basis.iter().map(|op| op.coords().into_entries()).collect(),
        };
        let text = serde_json::to_string(&file).map_err(io::Error::other)?;
        let tmp = self.path(name).with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(tmp, self.path(name))
    }

    /// `Ok(None)` if there is no file; an error if it is corrupt or was
    /// written under another convention.
    pub fn load(&self, name: &str) -> Result<Option<Vec<Operator>>, String> {
        let text = match fs::read_to_string(self.path(name)) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.to_string()),
        };
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if file.version != CACHE_VERSION || file.fingerprint != self.fingerprint || file.name != name {
            return Err("version or fingerprint mismatch".into());
        }
        let ops = file
            .elements
            .into_iter()
            .map(|entries| {
                let v: KVec = SparseVec::from_terms(entries);
                Operator::from_coords(file.dim, &v)
            })
            .collect();
        Ok(Some(ops))
    }

    /// Loads `name`, or computes and stores it. A corrupt file is
    /// recomputed with a warning on stderr.
    pub fn load_or_compute(&self, name: &str, dim: usize, compute: impl FnOnce() -> Vec<Operator>) -> (Vec<Operator>, CacheOutcome) {
        let outcome = match self.load(name) {
            Ok(Some(ops)) => return (ops, CacheOutcome::Hit),
            Ok(None) => CacheOutcome::Miss,
            Err(e) => {
                eprintln!("warning: ignoring cache file {}: {e}", self.path(name).display());
                CacheOutcome::Recomputed
            }
        };
        let ops = compute();
        if let Err(e) = self.save(name, dim, &ops) {
            eprintln!("warning: cannot write cache {}: {e}", self.path(name).display());
        }
        (ops, outcome)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Operator> {
        vec![
            Operator::of(3, |j| SparseVec::single((j + 1) % 3, Cyclo::frac(-7, 3))),
            Operator::diagonal(&[Cyclo::i(), Cyclo::sqrt3(), Cyclo::from_rational("123456789012345678901/2".parse().unwrap())]),
        ]
    }

    #[test]
    fn round_trip_and_outcomes() {
        let dir = tempfile::tempdir().unwrap();
        let cache = BasisCache::new(dir.path(), "abc123");
        let (ops, out) = cache.load_or_compute("t", 3, sample);
        assert_eq!(out, CacheOutcome::Miss);
        let (again, out) = cache.load_or_compute("t", 3, || unreachable!());
        assert_eq!(out, CacheOutcome::Hit);
        assert_eq!(again, ops);

        fs::write(cache.path("t"), "{ not json").unwrap();
        let (ops2, out) = cache.load_or_compute("t", 3, sample);
        assert_eq!(out, CacheOutcome::Recomputed);
        assert_eq!(ops2, ops);

        let other = BasisCache::new(dir.path(), "abc123-other");
        fs::copy(cache.path("t"), other.path("t")).unwrap();
        assert!(other.load("t").is_err());
    }
}
