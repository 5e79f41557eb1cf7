//! One step of the tower construction for two quaternion algebras sharing
//! a slot.
//!
//!     cargo run --example rost_step [a1 a2 b]

use witnesslab::brauer::QuaternionAlgebra;
use witnesslab::theorems::rost_step;

fn main() -> witnesslab::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a1, a2, b) = match args.as_slice() {
        [a1, a2, b] => (*a1, *a2, *b),
        _ => (-1, -3, -1),
    };
    let (q1, q2) = (QuaternionAlgebra::from_ints(a1, b)?, QuaternionAlgebra::from_ints(a2, b)?);
    let r = rost_step(&q1, &q2)?;
    println!("Q1 = {q1}, Q2 = {q2}");
    println!("c = {} (from φ'_{}), q = {}", r.c, r.i, r.q);
    println!("q anisotropic: {}, det q = {} nonsquare: {}", r.anisotropic, r.determinant, r.determinant_nonsquare);
    println!(
        "not similar to φ1/φ2/γ: {}/{}/{}",
        r.not_similar.phi1, r.not_similar.phi2, r.not_similar.gamma
    );
    println!(
        "φ1 − φ2 ~ {}·{} in the Witt ring: {} (anisotropic dim {})",
        r.albert.scale, r.albert.gamma, r.albert.witt_class_matches, r.albert.anisotropic_dim
    );
    println!("all checks pass: {}", r.all_checks_pass());
    Ok(())
}
