//! Reference computations shared by the integration tests. These work on
//! plain integers and only lean on the crate's `oracle` module.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::io::Write;

use witnesslab::oracle::HilbertOracle;

/// A place as seen by the oracle: `None` is the real place.
pub type RawPlace = Option<u64>;

pub fn is_squarefree(n: i64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n.unsigned_abs();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d * d) {
            return false;
        }
        if m.is_multiple_of(d) {
            m /= d;
        }
        d += 1;
    }
    true
}

/// Nonzero squarefree integers with `|n| ≤ bound`, ascending.
pub fn squarefree_range(bound: i64) -> Vec<i64> {
    (-bound..=bound).filter(|&n| is_squarefree(n)).collect()
}

pub fn prime_divisors(n: i64) -> Vec<u64> {
    let mut m = n.unsigned_abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

pub fn odd_primes_up_to(n: u64) -> Vec<u64> {
    (3..=n).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Is the squarefree integer `c` a square in `Q_v`?
pub fn locally_square(c: i64, v: RawPlace) -> bool {
    match v {
        None => c > 0,
        Some(2) => c.rem_euclid(8) == 1,
        Some(p) => c % p as i64 != 0 && pow_mod(c.rem_euclid(p as i64) as u64, (p - 1) / 2, p) == 1,
    }
}

/// Places where `(a, b)` ramifies, from congruence scans.
pub fn oracle_ram(oracle: &mut HilbertOracle, a: i64, b: i64) -> BTreeSet<RawPlace> {
    let mut candidates: BTreeSet<RawPlace> = [None, Some(2)].into_iter().collect();
    candidates.extend(prime_divisors(a).into_iter().chain(prime_divisors(b)).map(Some));
    candidates
        .into_iter()
        .filter(|&v| oracle.symbol(a, b, v).unwrap() == -1)
        .collect()
}

/// `Q(√c)` embeds in a division algebra iff `c` is a nonsquare at every
/// ramified place.
pub fn oracle_embeds(c: i64, ram: &BTreeSet<RawPlace>) -> bool {
    ram.iter().all(|&v| !locally_square(c, v))
}

/// Evaluates `Σ a_i x_i²`.
pub fn evaluate(q: &[i64], x: &[i64]) -> i128 {
    q.iter().zip(x).map(|(&a, &xi)| a as i128 * xi as i128 * xi as i128).sum()
}

/// All multisets of size `dim` drawn from `values`, as sorted vectors.
pub fn multisets(values: &[i64], dim: usize) -> Vec<Vec<i64>> {
    fn go(values: &[i64], dim: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == dim {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            go(values, dim, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, dim, 0, &mut Vec::new(), &mut out);
    out
}

/// Writes one status line straight to stdout, past the harness capture.
pub fn report(pass: bool, label: &str, detail: &str) {
    let line = format!("{} {label}: {detail}\n", if pass { "PASS" } else { "FAIL" });
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
}
