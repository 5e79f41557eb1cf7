//! Cross-checks the invariant-level engine against brute force on small
//! forms: isotropy vectors, Witt indices by explicit splitting, and Hilbert
//! symbols by congruence scans.
//!
//!     cargo run --release --example oracle_audit

use witnesslab::arith::SquareClass;
use witnesslab::brauer::hilbert;
use witnesslab::oracle::{isotropy_search, witt_index_by_stripping, HilbertOracle, SearchBudget};
use witnesslab::places::Place;
use witnesslab::quadform::{is_isotropic, witt_index, DiagonalForm};

fn main() -> witnesslab::Result<()> {
    let budget = SearchBudget::default();
    for entries in [&[1, 1, -2][..], &[1, 1, 1], &[1, 1, -3], &[1, -2, -5, 10], &[1, 1, -2, -2], &[1, 1, 1, -7], &[1, 1, 1, 1, -1, -3, -1, -3]] {
        let q = DiagonalForm::from_ints(entries)?;
        let witness = isotropy_search(entries, &budget);
        println!(
            "{q}: isotropic {} (search {:?}), witt index {} (stripping {})",
            is_isotropic(&q)?,
            witness,
            witt_index(&q)?,
            witt_index_by_stripping(entries, &budget)
        );
    }

    let mut oracle = HilbertOracle::new(budget);
    let mut disagreements = 0;
    let values: Vec<i64> = (-15..=15).filter(|&n| SquareClass::new(n).is_ok()).collect();
    for v in [Place::Real, Place::Dyadic, Place::odd(3)?, Place::odd(5)?, Place::odd(7)?] {
        for &a in &values {
            for &b in &values {
                let s = hilbert(SquareClass::new(a)?, SquareClass::new(b)?, v);
                disagreements += (s != oracle.symbol(a, b, v.prime_number())?) as u32;
            }
        }
    }
    println!("hilbert symbols on |a|, |b| ≤ 15 at 5 places: {disagreements} disagreements");
    Ok(())
}
