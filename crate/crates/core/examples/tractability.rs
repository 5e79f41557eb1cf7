//! Exhaustive tractability scans over Q_p and a random check over Q.
//!
//!     cargo run --release --example tractability

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use witnesslab::arith::SquareClass;
use witnesslab::places::Place;
use witnesslab::theorems::{tractable_search_local, tractable_verify, TractableBase, TractableConfig};

fn main() -> witnesslab::Result<()> {
    for v in [Place::odd(3)?, Place::odd(5)?, Place::odd(7)?, Place::odd(11)?, Place::Dyadic] {
        match tractable_search_local(v)? {
            None => println!("Q_{v}: tractable"),
            Some(cfg) => {
                let a: Vec<i64> = cfg.a.iter().map(|c| c.value()).collect();
                let b: Vec<i64> = cfg.b.iter().map(|c| c.value()).collect();
                println!("Q_{v}: violated by a = {a:?}, b = {b:?}");
            }
        }
    }

    let pool: Vec<SquareClass> = (-30..=30).filter_map(|n| SquareClass::new(n).ok()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut premises = 0;
    for _ in 0..100_000 {
        let mut pick = || *pool.choose(&mut rng).expect("nonempty");
        let cfg = TractableConfig {
            a: [pick(), pick(), pick()],
            b: [pick(), pick(), pick()],
            base: TractableBase::Rational,
        };
        let r = tractable_verify(&cfg);
        assert!(!r.is_violation());
        premises += r.premises_hold as u32;
    }
    println!("Q: 100000 random configurations, {premises} satisfy the premises, none violate");
    Ok(())
}
