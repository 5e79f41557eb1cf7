//! Finds a quadratic field inside exactly one of two quaternion division
//! algebras.
//!
//!     cargo run --example distinguish_quaternions [a1 b1 a2 b2]

use witnesslab::brauer::{embeds, ram_set, QuaternionAlgebra};
use witnesslab::theorems::distinguish_quaternions;

fn main() -> witnesslab::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let pairs = match args.as_slice() {
        [a1, b1, a2, b2] => vec![((*a1, *b1), (*a2, *b2))],
        _ => vec![((-1, -1), (-1, -3)), ((-1, -1), (2, 5)), ((-1, 3), (3, 5)), ((-1, -1), (-1, 7))],
    };
    for ((a1, b1), (a2, b2)) in pairs {
        let d1 = QuaternionAlgebra::from_ints(a1, b1)?;
        let d2 = QuaternionAlgebra::from_ints(a2, b2)?;
        let show = |d: &QuaternionAlgebra| ram_set(d).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        println!("D1 = {d1} ram {{{}}}, D2 = {d2} ram {{{}}}", show(&d1), show(&d2));
        match distinguish_quaternions(&d1, &d2)? {
            None => println!("  isomorphic: every quadratic subfield is shared"),
            Some(r) => {
                println!(
                    "  Q(√{}) embeds in {:?} only ({:?} case at {})",
                    r.witness, r.embeds_in, r.case, r.place
                );
                println!("  recheck: D1 {}, D2 {}", embeds(r.witness, &d1)?, embeds(r.witness, &d2)?);
            }
        }
    }
    Ok(())
}
