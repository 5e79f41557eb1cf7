//! Residue forms at an odd prime and the binary subform built from a
//! residue zero.
//!
//!     cargo run --example springer_residues

use witnesslab::arith::SquareClass;
use witnesslab::places::OddPrime;
use witnesslab::quadform::{adrian_subform, residues_at, DiagonalForm, PfisterForm};

fn main() -> witnesslab::Result<()> {
    let p = OddPrime::new(3)?;
    for slots in [[-1, 3], [7, 3], [-1, -1], [2, 3]] {
        let phi = PfisterForm::new(vec![SquareClass::new(slots[0])?, SquareClass::new(slots[1])?]);
        let r = residues_at(&phi.realize()?, p);
        println!(
            "{phi} at 3: first {:?}, second {:?}, ramified {}",
            r.first.entries,
            r.second.entries,
            r.is_ramified()
        );
    }

    for (entries, p) in [(&[1, 1, 1][..], 3), (&[1, -1, 5], 3), (&[1, 2, 3], 7), (&[1, 1, 1, 1], 3), (&[2, 3, 5, 7], 11)] {
        let psi = DiagonalForm::from_ints(entries)?;
        let w = adrian_subform(&psi, OddPrime::new(p)?)?;
        println!(
            "{psi} at {p}: zero {:?}, pivot {}, r = {}, s = {}, -rs = {}",
            w.residue_zero,
            w.pivot,
            w.r,
            w.s,
            w.minus_rs()?
        );
    }
    Ok(())
}
