//! Exact integer and rational arithmetic: factorization, square classes of
//! `Q^×`, and the Legendre symbol.
//!
//! Everything above this module works with [`SquareClass`] values, i.e.
//! squarefree nonzero integers standing for classes in `Q^× / Q^×2`. A
//! rational `n/d` lands in the class of `n·d`, since multiplying by `d²`
//! does not move the class.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number. The invariants (positive denominator, reduced)
/// are maintained by `num_rational`.
pub type RationalNumber = num_rational::BigRational;

/// Limits for [`factor_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorBudget {
    /// Trial division runs over all candidates up to this bound.
    pub trial_limit: u64,
    /// Maximum number of Pollard-rho steps spent on one composite cofactor.
    pub rho_steps: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_limit: 1_000_000,
            rho_steps: 1 << 22,
        }
    }
}

/// Prime factorization `sign · ∏ p^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    /// Primes strictly increasing, exponents at least one.
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn reconstruct(&self) -> BigInt {
        let mut acc = BigInt::from(self.sign);
        for &(p, e) in &self.factors {
            acc *= num_traits::pow(BigInt::from(p), e as usize);
        }
        acc
    }
}

/// Factors a nonzero integer with the default budget.
pub fn factor(n: &BigInt) -> Result<Factorization> {
    factor_with(n, &FactorBudget::default())
}

/// Factors a nonzero integer: trial division up to `budget.trial_limit`,
/// then Pollard rho on the remaining cofactor. Cofactors beyond 64 bits, or
/// that rho cannot split within budget, are rejected.
pub fn factor_with(n: &BigInt, budget: &FactorBudget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor zero"));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m: BigUint = n.magnitude().clone();
    let mut factors: Vec<(u64, u32)> = Vec::new();

    // Big-integer trial division until the cofactor fits in a machine word.
    let mut d: u64 = 2;
    while m.to_u64().is_none() {
        if d > budget.trial_limit {
            return Err(Error::resource(format!(
                "cofactor {m} has no factor below {} and exceeds 64 bits",
                budget.trial_limit
            )));
        }
        let bd = BigUint::from(d);
        let mut e = 0;
        while (&m % &bd).is_zero() {
            m /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
        d = if d == 2 { 3 } else { d + 2 };
    }

    let mut rest = m.to_u64().expect("checked above");
    // Continue trial division in u64 from wherever we stopped.
    while rest > 1 && d <= budget.trial_limit && d.saturating_mul(d) <= rest {
        let mut e = 0;
        while rest.is_multiple_of(d) {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if rest > 1 {
        if d.saturating_mul(d) > rest {
            push_factor(&mut factors, rest, 1);
        } else {
            let mut large = Vec::new();
            split_large(rest, budget.rho_steps, &mut large)?;
            for p in large {
                push_factor(&mut factors, p, 1);
            }
        }
    }
    factors.sort_unstable();
    Ok(Factorization { sign, factors })
}

fn push_factor(factors: &mut Vec<(u64, u32)>, p: u64, e: u32) {
    if let Some(entry) = factors.iter_mut().find(|(q, _)| *q == p) {
        entry.1 += e;
    } else {
        factors.push((p, e));
    }
}

fn split_large(n: u64, rho_steps: u64, out: &mut Vec<u64>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime_u64(n) {
        out.push(n);
        return Ok(());
    }
    let d = pollard_rho(n, rho_steps)
        .ok_or_else(|| Error::resource(format!("Pollard rho budget exhausted on {n}")))?;
    split_large(d, rho_steps, out)?;
    split_large(n / d, rho_steps, out)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant; returns a nontrivial divisor of composite n.
fn pollard_rho(n: u64, max_steps: u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut steps = 0u64;
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        while g == 1 {
            x = f(x);
            y = f(f(y));
            g = x.abs_diff(y).gcd(&n);
            steps += 1;
            if steps > max_steps {
                return None;
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

/// True when no prime square divides `n` (and `n > 0`).
pub fn is_squarefree_u64(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return false;
            }
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    true
}

/// A class in `Q^× / Q^×2`, stored as its unique squarefree integer
/// representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct SquareClass(i64);

impl SquareClass {
    pub const ONE: SquareClass = SquareClass(1);
    pub const MINUS_ONE: SquareClass = SquareClass(-1);

    /// Wraps an integer that must already be squarefree.
    pub fn new(value: i64) -> Result<Self> {
        if value == 0 {
            return Err(Error::domain("square class of zero"));
        }
        if !is_squarefree_u64(value.unsigned_abs()) {
            return Err(Error::domain(format!("{value} is not squarefree")));
        }
        Ok(SquareClass(value))
    }

    /// The class of an arbitrary nonzero integer.
    pub fn of_int(value: i64) -> Result<Self> {
        if value == 0 {
            return Err(Error::domain("square class of zero"));
        }
        squarefree_part_int(&BigInt::from(value))
    }

    pub(crate) const fn from_raw(value: i64) -> Self {
        SquareClass(value)
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn neg(self) -> Self {
        SquareClass(-self.0)
    }

    /// Class of the product. `a·b / gcd(a,b)²` is squarefree when `a`, `b`
    /// are, so no factoring is needed.
    pub fn mul(self, other: SquareClass) -> Result<Self> {
        let g = (self.0.unsigned_abs()).gcd(&other.0.unsigned_abs()) as i64;
        (self.0 / g)
            .checked_mul(other.0 / g)
            .map(SquareClass)
            .ok_or_else(|| Error::resource(format!("square class {self}·{other} overflows i64")))
    }

    /// Distinct primes dividing the representative.
    pub fn primes(self) -> Vec<u64> {
        let f = factor(&BigInt::from(self.0)).expect("squarefree i64 factors within budget");
        f.factors.into_iter().map(|(p, _)| p).collect()
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<i64> for SquareClass {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self> {
        SquareClass::new(v)
    }
}

impl From<SquareClass> for i64 {
    fn from(c: SquareClass) -> i64 {
        c.0
    }
}

impl FromStr for SquareClass {
    type Err = Error;
    /// Accepts an integer or a rational `n/d` and returns its class.
    fn from_str(s: &str) -> Result<Self> {
        squarefree_part(&parse_rational(s)?)
    }
}

/// Parses `n` or `n/d` into an exact rational.
pub fn parse_rational(s: &str) -> Result<RationalNumber> {
    let s = s.trim();
    let bad = || Error::domain(format!("malformed rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().map_err(|_| bad())?,
            d.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::domain(format!("zero denominator in `{s}`")));
    }
    Ok(RationalNumber::new(num, den))
}

fn squarefree_part_int(n: &BigInt) -> Result<SquareClass> {
    let f = factor(n)?;
    let mut acc: i64 = f.sign as i64;
    for (p, e) in f.factors {
        if e % 2 == 1 {
            let p = i64::try_from(p)
                .map_err(|_| Error::resource(format!("prime {p} does not fit a square class")))?;
            acc = acc
                .checked_mul(p)
                .ok_or_else(|| Error::resource(format!("squarefree part of {n} overflows i64")))?;
        }
    }
    Ok(SquareClass(acc))
}

/// Canonical representative of the square class of `q`.
pub fn squarefree_part(q: &RationalNumber) -> Result<SquareClass> {
    if q.is_zero() {
        return Err(Error::domain("squarefree part of zero"));
    }
    squarefree_part_int(&(q.numer() * q.denom()))
}

/// Jacobi symbol `(a/n)` for odd `n > 0`, by quadratic reciprocity.
pub(crate) fn jacobi(a: i64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut t = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && (n % 8 == 3 || n % 8 == 5) {
            t = -t;
        }
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    if p.is_multiple_of(2) || !is_prime_u64(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    Ok(jacobi(a, p))
}

/// Legendre symbol of a big integer.
pub fn legendre_big(a: &BigInt, p: u64) -> Result<i8> {
    let r = a.mod_floor(&BigInt::from(p));
    legendre(r.to_i64().expect("residue below p"), p)
}

/// Splits `n = p^e · u` with `p ∤ u`. `n` must be nonzero.
pub(crate) fn split_valuation(n: i64, p: u64) -> (u32, i64) {
    let p = p as i64;
    let (mut e, mut u) = (0, n);
    while u % p == 0 {
        u /= p;
        e += 1;
    }
    (e, u)
}

/// Squarefree integers in canonical order `1, −1, 2, −2, 3, −3, 5, −5, …`.
pub fn squarefree_enumeration() -> impl Iterator<Item = SquareClass> {
    (1u64..)
        .filter(|&n| is_squarefree_u64(n))
        .flat_map(|n| [SquareClass(n as i64), SquareClass(-(n as i64))])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> RationalNumber {
        parse_rational(s).unwrap()
    }

    #[test]
    fn squarefree_part_examples() {
        assert_eq!(squarefree_part(&rat("18")).unwrap().value(), 2);
        assert_eq!(squarefree_part(&rat("4/9")).unwrap().value(), 1);
        assert_eq!(squarefree_part(&rat("-50")).unwrap().value(), -2);
        assert_eq!(squarefree_part(&rat("5/12")).unwrap().value(), 15);
    }

    #[test]
    fn squarefree_part_rejects_zero() {
        assert!(matches!(squarefree_part(&rat("0")), Err(Error::Domain(_))));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(1, 3).unwrap(), 1);
        // squares mod 5 are {1, 4}
        let squares5: Vec<i64> = (1..5).map(|x| x * x % 5).collect();
        assert!(!squares5.contains(&2));
        assert_eq!(legendre(2, 5).unwrap(), -1);
        // Euler: (-1)^((7-1)/2) = -1
        assert_eq!(legendre(-1, 7).unwrap(), -1);
        assert_eq!(legendre(14, 7).unwrap(), 0);
    }

    #[test]
    fn legendre_rejects_non_odd_primes() {
        assert!(legendre(3, 2).is_err());
        assert!(legendre(3, 9).is_err());
        assert!(legendre(3, 1).is_err());
    }

    #[test]
    fn legendre_matches_euler_criterion() {
        for p in [3u64, 5, 7, 11, 13, 97, 101, 7919] {
            for a in -60i64..60 {
                let r = a.rem_euclid(p as i64) as u64;
                let euler = pow_mod(r, (p - 1) / 2, p);
                let expected = match euler {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
                assert_eq!(legendre(a, p).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn factorization_handles_large_cofactors() {
        // 1000003 * 1000033 exceeds the trial-division range.
        let n = BigInt::from(1_000_003u64 * 1_000_033u64) * BigInt::from(-12);
        let f = factor(&n).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.factors, vec![(2, 2), (3, 1), (1_000_003, 1), (1_000_033, 1)]);
        assert_eq!(f.reconstruct(), n);
    }

    #[test]
    fn factorization_beyond_budget_is_a_resource_error() {
        // product of two primes just above 2^64 / 2^32: cofactor exceeds 64 bits
        let p = BigInt::from(18446744073709551557u64); // largest prime below 2^64
        let n = &p * &p;
        assert!(matches!(factor(&n), Err(Error::Resource(_))));
    }

    #[test]
    fn square_class_product_is_reduced() {
        let a = SquareClass::new(6).unwrap();
        let b = SquareClass::new(-10).unwrap();
        assert_eq!(a.mul(b).unwrap().value(), -15);
        assert!(SquareClass::new(12).is_err());
        assert_eq!(SquareClass::of_int(-72).unwrap().value(), -2);
    }

    #[test]
    fn canonical_enumeration_prefix() {
        let got: Vec<i64> = squarefree_enumeration().take(12).map(|c| c.value()).collect();
        assert_eq!(got, vec![1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7]);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!("-3/12".parse::<SquareClass>().unwrap().value(), -1);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
