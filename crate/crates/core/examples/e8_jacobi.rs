//! Build the compact e₈ and check antisymmetry and the Jacobi identity on
//! the sector probes and on seeded basis triples.

use maxtori::e7::compute_e7_basis;
use maxtori::e8::{antisymmetry_defect, compute_e8_basis, jacobi_check, sector_probes, seeded_triples};
use maxtori::f4e6::compute_e6_basis;

fn main() {
    let samples: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2000);
    let basis = compute_e8_basis(&compute_e7_basis(&compute_e6_basis()));
    println!("basis: {}", basis.len());
    println!("antisymmetry defect: {:?}", antisymmetry_defect(&basis));

    let (probes, triples) = sector_probes(&basis);
    let r = jacobi_check(&probes, &triples);
    println!("sector triples: {} checked, {} failures", r.checked, r.failures.len());

    let r = jacobi_check(&basis, &seeded_triples(basis.len(), samples, 0));
    println!("seeded triples: {} checked, {} failures", r.checked, r.failures.len());
}
