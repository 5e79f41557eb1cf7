//! Ramification sets, the dyadic local type and nondyadic evidence for a
//! handful of quaternion algebras.
//!
//!     cargo run --example ramification [a b]

use witnesslab::brauer::{
    dyadic_local_type, h2u_witness, is_isomorphic, ram_set, DyadicLocalType, H2uEvidence, QuaternionAlgebra,
};

fn main() -> witnesslab::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let algebras: Vec<(i64, i64)> = match args.as_slice() {
        [a, b] => vec![(*a, *b)],
        _ => vec![(-1, -1), (-1, -3), (2, 5), (-1, 7), (3, -7), (6, 10), (1, 5)],
    };
    for &(a, b) in &algebras {
        let d = QuaternionAlgebra::from_ints(a, b)?;
        let ram: Vec<String> = ram_set(&d).iter().map(|v| v.to_string()).collect();
        println!(
            "{d}: ramified at {{{}}}, over Q_2 {}, {}",
            ram.join(", "),
            match dyadic_local_type(&d) {
                DyadicLocalType::Split => "split",
                DyadicLocalType::DivisionSeparableResidue => "division",
            },
            match h2u_witness(&d) {
                H2uEvidence::ZeroClass => "trivial class".to_string(),
                H2uEvidence::NondyadicRamified(v) => format!("ramified at the nondyadic place {v}"),
                H2uEvidence::RealObstruction => "detected at the real place".to_string(),
            }
        );
    }
    if algebras.len() > 1 {
        let (d1, d2) = (QuaternionAlgebra::from_ints(-1, 7)?, QuaternionAlgebra::from_ints(-1, -1)?);
        println!("{d1} ≅ {d2}: {}", is_isomorphic(&d1, &d2));
    }
    Ok(())
}
