use serde::Serialize;

use crate::arith::SquareClass;
use crate::brauer::{hilbert, ram_set, QuaternionAlgebra};
use crate::error::{Error, Result};
use crate::places::{square_classes, Place};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "place")]
pub enum TractableBase {
    Rational,
    Local(Place),
}

/// Six square classes `a1, a2, a3, b1, b2, b3` over a base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TractableConfig {
    pub a: [SquareClass; 3],
    pub b: [SquareClass; 3],
    pub base: TractableBase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TractableReport {
    /// All `(a_i, b_j)` with `i ≠ j` split and the `(a_i, b_i)` pairwise
    /// isomorphic.
    pub premises_hold: bool,
    /// The `(a_i, b_i)` are split.
    pub conclusion_holds: bool,
}

impl TractableReport {
    pub fn is_violation(&self) -> bool {
        self.premises_hold && !self.conclusion_holds
    }
}

pub fn tractable_verify(cfg: &TractableConfig) -> TractableReport {
    let pairs = || (0..3).flat_map(|i| (0..3).map(move |j| (i, j)));
    match cfg.base {
        TractableBase::Rational => {
            let ram = |i: usize, j: usize| ram_set(&QuaternionAlgebra::new(cfg.a[i], cfg.b[j]));
            let cross_split = pairs().filter(|(i, j)| i != j).all(|(i, j)| ram(i, j).is_empty());
            let diag = [ram(0, 0), ram(1, 1), ram(2, 2)];
            TractableReport {
                premises_hold: cross_split && diag[0] == diag[1] && diag[1] == diag[2],
                conclusion_holds: diag.iter().all(|r| r.is_empty()),
            }
        }
        TractableBase::Local(v) => {
            let sym = |i: usize, j: usize| hilbert(cfg.a[i], cfg.b[j], v);
            let cross_split = pairs().filter(|(i, j)| i != j).all(|(i, j)| sym(i, j) == 1);
            let diag = [sym(0, 0), sym(1, 1), sym(2, 2)];
            TractableReport {
                premises_hold: cross_split && diag[0] == diag[1] && diag[1] == diag[2],
                conclusion_holds: diag.iter().all(|&s| s == 1),
            }
        }
    }
}

/// Exhaustive scan of `square_classes(v)^6` in lexicographic order of
/// `(a1, a2, a3, b1, b2, b3)`. Returns the first configuration violating
/// tractability, or `None` when the scan proves there is none.
pub fn tractable_search_local(v: Place) -> Result<Option<TractableConfig>> {
    if v == Place::Real {
        return Err(Error::domain("tractability scans need a nonarchimedean place"));
    }
    let classes = square_classes(v);
    let k = classes.len();
    let table: Vec<Vec<i8>> = classes
        .iter()
        .map(|&x| classes.iter().map(|&y| hilbert(x, y, v)).collect())
        .collect();
    let total = k.pow(6);
    for code in 0..total {
        let mut idx = [0usize; 6];
        let mut rest = code;
        for slot in idx.iter_mut().rev() {
            *slot = rest % k;
            rest /= k;
        }
        let (a, b) = (&idx[..3], &idx[3..]);
        let diag = [table[a[0]][b[0]], table[a[1]][b[1]], table[a[2]][b[2]]];
        if diag[0] == 1 || diag[1] != diag[0] || diag[2] != diag[0] {
            continue;
        }
        let cross_split = (0..3).all(|i| (0..3).all(|j| i == j || table[a[i]][b[j]] == 1));
        if cross_split {
            let pick = |i: usize| classes[idx[i]];
            let cfg = TractableConfig {
                a: [pick(0), pick(1), pick(2)],
                b: [pick(3), pick(4), pick(5)],
                base: TractableBase::Local(v),
            };
            debug_assert!(tractable_verify(&cfg).is_violation());
            return Ok(Some(cfg));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_config() {
        let one = SquareClass::ONE;
        let r = tractable_verify(&TractableConfig {
            a: [one; 3],
            b: [one; 3],
            base: TractableBase::Rational,
        });
        assert!(r.premises_hold && r.conclusion_holds);
    }

    #[test]
    fn nondyadic_places_are_tractable() {
        for p in [3, 5, 7, 11] {
            assert_eq!(tractable_search_local(Place::odd(p).unwrap()).unwrap(), None);
        }
    }

    #[test]
    fn dyadic_place_is_not() {
        let cfg = tractable_search_local(Place::Dyadic).unwrap().expect("Q_2 is not tractable");
        assert!(tractable_verify(&cfg).is_violation());
    }
}
