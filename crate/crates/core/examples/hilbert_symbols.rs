//! Prints Hilbert symbols `(a, b)_v` for a few algebras at the places that
//! matter, next to the congruence-scan reference.
//!
//!     cargo run --example hilbert_symbols

use witnesslab::arith::SquareClass;
use witnesslab::brauer::hilbert;
use witnesslab::oracle::{HilbertOracle, SearchBudget};
use witnesslab::places::{support, Place};

fn main() -> witnesslab::Result<()> {
    let mut oracle = HilbertOracle::new(SearchBudget::default());
    for (a, b) in [(-1, -1), (-1, -3), (2, 5), (3, 7), (-2, 15)] {
        let (ca, cb) = (SquareClass::new(a)?, SquareClass::new(b)?);
        let mut places: Vec<Place> = support(&[ca, cb]).into_iter().collect();
        places.sort();
        print!("({a}, {b}):");
        let mut product = 1;
        for v in places {
            let s = hilbert(ca, cb, v);
            let reference = oracle.symbol(a, b, v.prime_number())?;
            assert_eq!(s, reference);
            product *= s;
            print!("  {v}:{s:+}");
        }
        println!("   product {product:+}");
    }
    Ok(())
}
