//! Places of `Q` and local square-class structure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::arith::{self, is_prime_u64, split_valuation, squarefree_enumeration, RationalNumber, SquareClass};
use crate::error::{Error, Result};

/// Default number of candidates tried by [`find_square_class`].
pub const DEFAULT_SEARCH_BOUND: usize = 10_000;

/// An odd prime, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(p: u64) -> Result<Self> {
        if p % 2 == 1 && is_prime_u64(p) {
            Ok(OddPrime(p))
        } else {
            Err(Error::domain(format!("{p} is not an odd prime")))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// A place of `Q`. The derived order puts the dyadic place first, odd
/// primes ascending, and the real place last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Dyadic,
    OddPrime(OddPrime),
    Real,
}

impl Place {
    pub fn odd(p: u64) -> Result<Place> {
        OddPrime::new(p).map(Place::OddPrime)
    }

    /// The place attached to a rational prime.
    pub fn prime(p: u64) -> Result<Place> {
        if p == 2 {
            Ok(Place::Dyadic)
        } else {
            Place::odd(p)
        }
    }

    /// The residue characteristic, `None` for the real place.
    pub fn prime_number(self) -> Option<u64> {
        match self {
            Place::Dyadic => Some(2),
            Place::OddPrime(p) => Some(p.get()),
            Place::Real => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Dyadic => write!(f, "2"),
            Place::OddPrime(p) => write!(f, "{}", p.get()),
            Place::Real => write!(f, "inf"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;
    fn from_str(s: &str) -> Result<Place> {
        match s.trim() {
            "inf" | "real" | "oo" => Ok(Place::Real),
            other => {
                let p: u64 = other
                    .parse()
                    .map_err(|_| Error::domain(format!("unknown place `{other}`")))?;
                Place::prime(p)
            }
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// "`c` should (not) be a square in `Q_v`".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalSquareConstraint {
    pub place: Place,
    pub want_square: bool,
}

impl LocalSquareConstraint {
    pub fn square(place: Place) -> Self {
        LocalSquareConstraint { place, want_square: true }
    }

    pub fn nonsquare(place: Place) -> Self {
        LocalSquareConstraint { place, want_square: false }
    }
}

/// Exact `p`-adic valuation of a nonzero rational.
pub fn valuation(q: &RationalNumber, p: u64) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::domain("valuation of zero"));
    }
    if !is_prime_u64(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let bp = BigInt::from(p);
    let count = |n: &BigInt| {
        let mut n = n.clone();
        let mut e = 0i64;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        e
    };
    Ok(count(q.numer()) - count(q.denom()))
}

/// Whether `c` is a square in the completion `Q_v`.
pub fn is_local_square(c: SquareClass, v: Place) -> bool {
    match v {
        Place::Real => c.is_positive(),
        Place::Dyadic => {
            let (e, u) = split_valuation(c.value(), 2);
            e % 2 == 0 && u.rem_euclid(8) == 1
        }
        Place::OddPrime(p) => {
            let (e, u) = split_valuation(c.value(), p.get());
            e % 2 == 0 && arith::jacobi(u, p.get()) == 1
        }
    }
}

/// First unit nonsquare mod `p` in canonical enumeration order.
pub(crate) fn least_nonresidue(p: OddPrime) -> SquareClass {
    squarefree_enumeration()
        .find(|c| c.value() % p.get() as i64 != 0 && arith::jacobi(c.value(), p.get()) == -1)
        .expect("every odd prime has a nonresidue")
}

/// Representatives of `Q_v^× / Q_v^×2`.
pub fn square_classes(v: Place) -> Vec<SquareClass> {
    let raw: Vec<i64> = match v {
        Place::Real => vec![1, -1],
        Place::Dyadic => vec![1, -1, 2, -2, 5, -5, 10, -10],
        Place::OddPrime(p) => {
            let u = least_nonresidue(p).value();
            let p = p.get() as i64;
            vec![1, u, p, u * p]
        }
    };
    raw.into_iter().map(SquareClass::from_raw).collect()
}

/// The places where an algebra or form built from `classes` can be
/// locally nontrivial: the real place, the dyadic place and every odd prime
/// dividing one of the classes.
pub fn support(classes: &[SquareClass]) -> BTreeSet<Place> {
    let mut out = BTreeSet::from([Place::Real, Place::Dyadic]);
    for c in classes {
        for p in c.primes() {
            if p != 2 {
                out.insert(Place::OddPrime(OddPrime(p)));
            }
        }
    }
    out
}

/// First square class in canonical order meeting every constraint.
pub fn find_square_class(constraints: &[LocalSquareConstraint]) -> Result<SquareClass> {
    find_square_class_within(constraints, DEFAULT_SEARCH_BOUND)
}

pub fn find_square_class_within(
    constraints: &[LocalSquareConstraint],
    bound: usize,
) -> Result<SquareClass> {
    let places: BTreeSet<Place> = constraints.iter().map(|c| c.place).collect();
    if places.len() != constraints.len() {
        return Err(Error::domain("a place appears in more than one constraint"));
    }
    let found = squarefree_enumeration()
        .take(bound)
        .find(|&c| constraints.iter().all(|k| is_local_square(c, k.place) == k.want_square))
        .ok_or(Error::SearchExhausted { bound })?;
    debug_assert!(constraints
        .iter()
        .all(|k| is_local_square(found, k.place) == k.want_square));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn sq(v: i64) -> SquareClass {
        SquareClass::new(v).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&parse_rational("18").unwrap(), 3).unwrap(), 2);
        assert_eq!(valuation(&parse_rational("5/4").unwrap(), 2).unwrap(), -2);
        assert_eq!(valuation(&parse_rational("7").unwrap(), 3).unwrap(), 0);
        assert!(valuation(&parse_rational("0").unwrap(), 3).is_err());
    }

    #[test]
    fn local_square_examples() {
        assert!(is_local_square(sq(-5), Place::odd(3).unwrap()));
        assert!(!is_local_square(sq(-3), Place::Real));
        assert!(is_local_square(sq(17), Place::Dyadic));
        assert!(!is_local_square(sq(3), Place::Dyadic));
        assert!(!is_local_square(sq(3), Place::odd(3).unwrap()));
    }

    #[test]
    fn dyadic_criterion_matches_squares_mod_power_of_two() {
        // odd squares mod 2^k are exactly the residues ≡ 1 mod 8, k >= 3
        for k in 3..=10u32 {
            let m = 1i64 << k;
            let squares: BTreeSet<i64> = (0..m).filter(|x| x % 2 == 1).map(|x| x * x % m).collect();
            for u in (1..m).step_by(2) {
                assert_eq!(squares.contains(&u), u % 8 == 1, "u={u} mod 2^{k}");
            }
        }
    }

    #[test]
    fn square_class_representatives() {
        let vals = |v| square_classes(v).into_iter().map(|c| c.value()).collect::<Vec<_>>();
        assert_eq!(vals(Place::Real), vec![1, -1]);
        assert_eq!(vals(Place::Dyadic), vec![1, -1, 2, -2, 5, -5, 10, -10]);
        assert_eq!(vals(Place::odd(3).unwrap()), vec![1, -1, 3, -3]);
        assert_eq!(vals(Place::odd(5).unwrap()), vec![1, 2, 5, 10]);
    }

    #[test]
    fn square_class_representatives_are_inequivalent() {
        let mut places = vec![Place::Real, Place::Dyadic];
        for p in [3, 5, 7, 11, 13, 17, 19, 23] {
            places.push(Place::odd(p).unwrap());
        }
        for v in places {
            let reps = square_classes(v);
            for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    assert!(!is_local_square(a.mul(*b).unwrap(), v), "{a} ~ {b} at {v}");
                }
            }
        }
    }

    #[test]
    fn find_square_class_examples() {
        assert_eq!(find_square_class(&[]).unwrap().value(), 1);
        assert_eq!(
            find_square_class(&[LocalSquareConstraint::square(Place::Real)]).unwrap().value(),
            1
        );
        let c = find_square_class(&[
            LocalSquareConstraint::nonsquare(Place::Real),
            LocalSquareConstraint::nonsquare(Place::Dyadic),
            LocalSquareConstraint::square(Place::odd(3).unwrap()),
        ])
        .unwrap();
        assert_eq!(c.value(), -2);
    }

    #[test]
    fn find_square_class_errors() {
        let dup = [
            LocalSquareConstraint::square(Place::Real),
            LocalSquareConstraint::nonsquare(Place::Real),
        ];
        assert!(matches!(find_square_class(&dup), Err(Error::Domain(_))));
        let hard = [
            LocalSquareConstraint::nonsquare(Place::Real),
            LocalSquareConstraint::square(Place::Dyadic),
        ];
        // -7 is the first answer; a bound of 10 candidates stops at -7's predecessor
        assert_eq!(find_square_class(&hard).unwrap().value(), -7);
        assert_eq!(find_square_class_within(&hard, 10), Err(Error::SearchExhausted { bound: 10 }));
    }

    #[test]
    fn place_parsing_and_order() {
        assert_eq!("inf".parse::<Place>().unwrap(), Place::Real);
        assert_eq!("2".parse::<Place>().unwrap(), Place::Dyadic);
        assert!("9".parse::<Place>().is_err());
        let mut v = [Place::Real, Place::odd(5).unwrap(), Place::Dyadic, Place::odd(3).unwrap()];
        v.sort();
        let s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
        assert_eq!(s, vec!["2", "3", "5", "inf"]);
    }
}
