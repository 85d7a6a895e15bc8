use std::fmt::Write;
use std::path::PathBuf;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use super::cache::BasisCache;
use crate::e7::{compute_e7_basis, E7Element};
use crate::e8::{compute_e8_basis, E8Element};
use crate::f4e6::{compute_e6_basis, compute_f4_basis};
use crate::jordan::{basis_cross, JDIM};
use crate::linalg::Operator;
use crate::octonion::MulTable;

/// Textual form of the `e₇`/`e₈` conventions, hashed into the fingerprint.
const E7_CONVENTIONS: &str = "\
ΦP = (φX − ⅓νX + 2B×Y + ηA, 2A×X − ᵗφY + ⅓νY + ξB, (A,Y) + νξ, (B,X) − νη); \
X∨Y = [X̃,Ỹ] + (X∘Y − ⅓(X,Y)E)~; \
P×Q = (−½(X∨W + Z∨Y), −¼(2Y×W − ξZ − ζX), ¼(2X×Z − ηW − ωY), ⅛((X,W) + (Z,Y) − 3(ξω + ζη))); \
{P,Q} = (X,W) − (Z,Y) + ξω − ζη; λ(X,Y,ξ,η) = (Y,−X,η,−ξ); ι = diag(−i,i,−i,i)";

/// SHA-256 over the octonion table, the Freudenthal cross product on
/// basis pairs, and the adopted `e₇` formulas.
pub fn convention_fingerprint() -> String {
    static FP: OnceLock<String> = OnceLock::new();
    FP.get_or_init(|| {
        let mut text = String::new();
        for row in MulTable::standard().signed_table() {
            let _ = writeln!(text, "{row:?}");
        }
        for a in 0..JDIM {
            for b in a..JDIM {
                let _ = write!(text, "{a},{b}:");
                for (k, v) in basis_cross(a, b).iter() {
                    let _ = write!(text, " {k}={v}");
                }
                text.push('\n');
            }
        }
        text.push_str(E7_CONVENTIONS);
        let digest = Sha256::digest(text.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    })
    .clone()
}

/// Lazily computed bases of `f₄ ⊂ e₆ ⊂ e₇ ⊂ e₈`, with the kernel
/// computations optionally backed by a [`BasisCache`].
#[derive(Default)]
pub struct Tower {
    cache: Option<BasisCache>,
    f4: OnceLock<Vec<Operator>>,
    e6: OnceLock<Vec<Operator>>,
    e7: OnceLock<Vec<E7Element>>,
    e8: OnceLock<Vec<E8Element>>,
}

impl Tower {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        Tower {
            cache: cache_dir.map(|d| BasisCache::new(d, convention_fingerprint())),
            ..Self::default()
        }
    }

    fn cached(&self, name: &str, compute: fn() -> Vec<Operator>) -> Vec<Operator> {
        match &self.cache {
            Some(c) => c.load_or_compute(name, JDIM, compute).0,
            None => compute(),
        }
    }

    pub fn f4(&self) -> &[Operator] {
        self.f4.get_or_init(|| self.cached("f4", compute_f4_basis))
    }

    pub fn e6(&self) -> &[Operator] {
        self.e6.get_or_init(|| self.cached("e6", compute_e6_basis))
    }

    pub fn e7(&self) -> &[E7Element] {
        self.e7.get_or_init(|| compute_e7_basis(self.e6()))
    }

    pub fn e8(&self) -> &[E8Element] {
        self.e8.get_or_init(|| compute_e8_basis(self.e7()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fingerprint_is_stable_hex() {
        let f = convention_fingerprint();
        assert_eq!(f.len(), 64);
        assert!(f.chars().all(|c| c.is_ascii_hexdigit()));
        assert_eq!(f, convention_fingerprint());
    }

    #[test]
    fn cached_tower_matches_fresh() {
        let dir = tempfile::tempdir().unwrap();
        let cold = Tower::new(Some(dir.path().to_path_buf()));
        let f4 = cold.f4().to_vec();
        let warm = Tower::new(Some(dir.path().to_path_buf()));
        assert_eq!(warm.f4(), &f4[..]);
        assert_eq!(Tower::new(None).f4(), &f4[..]);
    }
}
