//! Divisors that tell two Pfister forms apart at one valuation, over Q at
//! an odd prime and over Q(t) at t.
//!
//!     cargo run --example crux_witness

use witnesslab::arith::SquareClass;
use witnesslab::places::OddPrime;
use witnesslab::quadform::{Monomial, PfisterForm};
use witnesslab::theorems::{crux_witness, crux_witness_qt};

fn main() -> witnesslab::Result<()> {
    let pf = |s: &[i64]| -> witnesslab::Result<PfisterForm> {
        Ok(PfisterForm::new(s.iter().map(|&v| SquareClass::new(v)).collect::<Result<_, _>>()?))
    };
    for (a, b, p) in [(&[-1, 3][..], &[-1, -1][..], 3), (&[-1, 7], &[-1, -1], 7), (&[3, -7], &[-3, -1], 7)] {
        let (phi1, phi2) = (pf(a)?, pf(b)?);
        let r = crux_witness(&phi1, &phi2, OddPrime::new(p)?)?;
        println!("{phi1} vs {phi2} at {p}: γ = {} divides {:?} ({:?})", r.gamma, r.divides, r.branch);
        if let Some(w) = r.adrian {
            println!("    residue zero {:?}, r = {}, s = {}", w.residue_zero, w.r, w.s);
        }
    }

    let pft = |s: &[&str]| -> witnesslab::Result<PfisterForm<Monomial>> {
        Ok(PfisterForm::new(s.iter().map(|x| x.parse()).collect::<Result<_, _>>()?))
    };
    for (a, b) in [(["-1", "-1", "t"], ["-1", "-1", "-1"]), (["-1", "-1", "t"], ["-1", "-7", "t"]), (["-3t", "-1", "-5"], ["-2", "-1", "-1"])] {
        let (phi1, phi2) = (pft(&a)?, pft(&b)?);
        let r = crux_witness_qt(&phi1, &phi2)?;
        println!(
            "{phi1} vs {phi2} at t: γ = {} divides {:?} ({:?}, {:?})",
            r.gamma, r.divides, r.case, r.branch
        );
    }
    Ok(())
}
