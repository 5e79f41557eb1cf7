//! Pfister divisibility over Q and over Q(t), and slot normalization at an
//! odd prime.
//!
//!     cargo run --example pfister_divisors

use witnesslab::arith::SquareClass;
use witnesslab::places::OddPrime;
use witnesslab::quadform::{normalize_pfister, pfister_divides, pfister_divides_qt, Monomial, PfisterForm, QtDivisibility};

fn pf(slots: &[i64]) -> witnesslab::Result<PfisterForm> {
    Ok(PfisterForm::new(slots.iter().map(|&v| SquareClass::new(v)).collect::<Result<_, _>>()?))
}

fn pft(slots: &[&str]) -> witnesslab::Result<PfisterForm<Monomial>> {
    Ok(PfisterForm::new(slots.iter().map(|s| s.parse()).collect::<Result<_, _>>()?))
}

fn main() -> witnesslab::Result<()> {
    for (g, phi) in [(&[-1][..], &[-1, -1][..]), (&[-2], &[-1, -1]), (&[-3], &[-1, -1]), (&[5], &[2, 5])] {
        let (g, phi) = (pf(g)?, pf(phi)?);
        let v = pfister_divides(&g, &phi)?;
        match v.witness {
            Some(c) => println!("{g} | {phi}: {phi} ≅ {}", g.with_slot(c)),
            None => println!("{g} ∤ {phi}"),
        }
    }

    let p = OddPrime::new(3)?;
    for slots in [&[3, 6][..], &[-3, 3], &[7, 3], &[-1, 15]] {
        let phi = pf(slots)?;
        let n = normalize_pfister(&phi, p)?;
        let units: Vec<String> = n.unit_slots.iter().map(|c| c.to_string()).collect();
        let ramified = n.ramified_slot.map_or("none".to_string(), |c| c.to_string());
        println!("{phi} at 3: unit slots [{}], ramified slot {ramified}", units.join(", "));
    }

    for (g, phi) in [(&["-1", "-1"][..], &["-1", "-1", "t"][..]), (&["-1", "-1"], &["-1", "-7", "t"]), (&["-1"], &["1", "-1"])] {
        let (g, phi) = (pft(g)?, pft(phi)?);
        let verdict = match pfister_divides_qt(&g, &phi)? {
            QtDivisibility::Yes { witness } => format!("yes, {phi} ≅ {}", g.with_slot(witness)),
            QtDivisibility::No { refutation } => format!("no: {refutation}"),
            QtDivisibility::Inconclusive { tried } => format!("inconclusive after {tried} candidates"),
        };
        println!("over Q(t): {g} | {phi}? {verdict}");
    }
    Ok(())
}
