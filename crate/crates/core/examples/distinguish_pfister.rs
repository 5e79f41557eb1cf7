//! Separates anisotropic 2-Pfister forms over Q by a 1-fold divisor.
//!
//!     cargo run --example distinguish_pfister

use witnesslab::arith::SquareClass;
use witnesslab::quadform::{pfister_divides, PfisterForm};
use witnesslab::theorems::distinguish_pfister;

fn main() -> witnesslab::Result<()> {
    let pf = |s: [i64; 2]| -> witnesslab::Result<PfisterForm> {
        Ok(PfisterForm::new(vec![SquareClass::new(s[0])?, SquareClass::new(s[1])?]))
    };
    for (a, b) in [([-1, -1], [-1, -3]), ([-1, -1], [2, 5]), ([-1, 3], [-1, 7]), ([-1, -1], [-1, 7])] {
        let (phi1, phi2) = (pf(a)?, pf(b)?);
        match distinguish_pfister(&phi1, &phi2)? {
            None => println!("{phi1} ≅ {phi2}"),
            Some(r) => {
                let check = [pfister_divides(&r.witness, &phi1)?.divides, pfister_divides(&r.witness, &phi2)?.divides];
                println!(
                    "{phi1} vs {phi2}: {} divides {:?} ({:?} at {}), recheck {check:?}",
                    r.witness, r.embeds_in, r.case, r.place
                );
            }
        }
    }
    Ok(())
}
