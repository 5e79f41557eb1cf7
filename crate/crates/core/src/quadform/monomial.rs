use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::{parse_rational, squarefree_enumeration, squarefree_part, SquareClass};
use crate::error::{Error, Result};
use crate::places::DEFAULT_SEARCH_BOUND;

use super::pfister::{normalize_slots, NormalizedPfister};
use super::rational::{witt_equivalent, witt_index};
use super::residue::ResiduePair;
use super::{check_degrees, DiagonalForm, FormEntry, PfisterForm};

/// `c·t^e` modulo squares of `Q(t)^×`, with `e ∈ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub coeff: SquareClass,
    pub t: bool,
}

impl Monomial {
    pub fn constant(coeff: SquareClass) -> Self {
        Monomial { coeff, t: false }
    }

    pub fn times_t(coeff: SquareClass) -> Self {
        Monomial { coeff, t: true }
    }
}

impl FormEntry for Monomial {
    fn one() -> Self {
        Monomial::constant(SquareClass::ONE)
    }

    fn mul(self, other: Self) -> Result<Self> {
        Ok(Monomial {
            coeff: self.coeff.mul(other.coeff)?,
            t: self.t ^ other.t,
        })
    }

    fn neg(self) -> Self {
        Monomial {
            coeff: self.coeff.neg(),
            t: self.t,
        }
    }
}

impl From<SquareClass> for Monomial {
    fn from(c: SquareClass) -> Self {
        Monomial::constant(c)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.t, self.coeff.value()) {
            (false, c) => write!(f, "{c}"),
            (true, 1) => write!(f, "t"),
            (true, -1) => write!(f, "-t"),
            (true, c) => write!(f, "{c}t"),
        }
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts `5`, `-3/4`, `t`, `-t`, `3t`, `2/3t`, `3*t`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (coeff, t) = match s.strip_suffix('t') {
            Some(rest) => (rest.trim_end_matches('*'), true),
            None => (s, false),
        };
        let coeff = match coeff {
            "" | "+" => SquareClass::ONE,
            "-" => SquareClass::MINUS_ONE,
            c => squarefree_part(&parse_rational(c)?)?,
        };
        Ok(Monomial { coeff, t })
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub type MonomialForm = DiagonalForm<Monomial>;

/// First residue: coefficients of the `t`-free entries. Second residue:
/// coefficients of the entries carrying `t`. Both are forms over `Q`.
pub fn t_adic_residues(q: &MonomialForm) -> ResiduePair<DiagonalForm> {
    let (second, first): (Vec<Monomial>, Vec<Monomial>) = q.entries().iter().partition(|m| m.t);
    ResiduePair {
        first: DiagonalForm::new(first.into_iter().map(|m| m.coeff).collect()),
        second: DiagonalForm::new(second.into_iter().map(|m| m.coeff).collect()),
    }
}

/// Isometry over `Q(t)`: equal dimension and Witt-equivalent residues.
pub fn qt_isometry(q1: &MonomialForm, q2: &MonomialForm) -> Result<bool> {
    if q1.dim() != q2.dim() {
        return Ok(false);
    }
    let (r1, r2) = (t_adic_residues(q1), t_adic_residues(q2));
    Ok(witt_equivalent(&r1.first, &r2.first)? && witt_equivalent(&r1.second, &r2.second)?)
}

fn anisotropic_dim(q: &DiagonalForm) -> Result<usize> {
    Ok(q.dim() - 2 * witt_index(q)?)
}

/// Anisotropic over `Q(t)` iff both residues are anisotropic over `Q`.
pub fn qt_anisotropic(q: &MonomialForm) -> Result<bool> {
    let r = t_adic_residues(q);
    Ok(witt_index(&r.first)? == 0 && witt_index(&r.second)? == 0)
}

/// Witt index of a monomial form. It agrees over `Q(t)` and `Q((t))`: the
/// anisotropic part is `an(q0) ⊥ t·an(q1)`.
pub fn qt_local_witt_index(q: &MonomialForm) -> Result<usize> {
    let r = t_adic_residues(q);
    Ok((q.dim() - anisotropic_dim(&r.first)? - anisotropic_dim(&r.second)?) / 2)
}

/// Three-valued divisibility verdict over `Q(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum QtDivisibility {
    Yes { witness: Monomial },
    No { refutation: String },
    Inconclusive { tried: usize },
}

impl QtDivisibility {
    /// `Some(true/false)` for a conclusive verdict.
    pub fn conclusive(&self) -> Option<bool> {
        match self {
            QtDivisibility::Yes { .. } => Some(true),
            QtDivisibility::No { .. } => Some(false),
            QtDivisibility::Inconclusive { .. } => None,
        }
    }
}

pub fn pfister_divides_qt(gamma: &PfisterForm<Monomial>, phi: &PfisterForm<Monomial>) -> Result<QtDivisibility> {
    pfister_divides_qt_within(gamma, phi, DEFAULT_SEARCH_BOUND)
}

/// Refutes by the subform test `witt_index(φ ⊥ −γ) ≥ dim γ`, otherwise
/// searches monomial witnesses `c = c0·t^e` with `c0` in canonical order.
pub fn pfister_divides_qt_within(
    gamma: &PfisterForm<Monomial>,
    phi: &PfisterForm<Monomial>,
    bound: usize,
) -> Result<QtDivisibility> {
    check_degrees(gamma.degree(), phi.degree())?;
    let g = gamma.realize()?;
    let target = phi.realize()?;
    let index = qt_local_witt_index(&target.perp(&g.negate()))?;
    if index < g.dim() {
        return Ok(QtDivisibility::No {
            refutation: format!(
                "{} ⊥ −{} has Witt index {index} over Q((t)), below {}",
                target,
                g,
                g.dim()
            ),
        });
    }
    let mut tried = 0;
    for c0 in squarefree_enumeration().take(bound) {
        for t in [false, true] {
            let c = Monomial { coeff: c0, t };
            tried += 1;
            if qt_isometry(&gamma.with_slot(c).realize()?, &target)? {
                return Ok(QtDivisibility::Yes { witness: c });
            }
        }
    }
    Ok(QtDivisibility::Inconclusive { tried })
}

/// Normalizes a monomial Pfister form at the `t`-adic valuation.
pub fn normalize_pfister_t(phi: &PfisterForm<Monomial>) -> Result<NormalizedPfister<Monomial>> {
    normalize_slots(phi.slots(), |m: Monomial| m.t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn form(v: &[&str]) -> MonomialForm {
        DiagonalForm::new(v.iter().map(|s| mono(s)).collect())
    }

    fn pf(v: &[&str]) -> PfisterForm<Monomial> {
        PfisterForm::new(v.iter().map(|s| mono(s)).collect())
    }

    #[test]
    fn parse_and_display() {
        for (s, shown) in [("t", "t"), ("-t", "-t"), ("3t", "3t"), ("12t", "3t"), ("-1/2", "-2"), ("5*t", "5t")] {
            assert_eq!(mono(s).to_string(), shown);
        }
        assert!("0t".parse::<Monomial>().is_err());
        assert!("x".parse::<Monomial>().is_err());
    }

    #[test]
    fn isometry_examples() {
        assert!(qt_isometry(&form(&["1", "-t"]), &form(&["1", "-t"])).unwrap());
        let a = pf(&["-1", "-1", "t"]).realize().unwrap();
        let b = pf(&["-1", "-7", "t"]).realize().unwrap();
        assert!(!qt_isometry(&a, &b).unwrap());
        assert!(qt_isometry(&form(&["t", "-t"]), &form(&["1", "-1"])).unwrap());
        assert!(!qt_isometry(&form(&["1", "t"]), &form(&["1", "1"])).unwrap());
    }

    #[test]
    fn anisotropy() {
        assert!(qt_anisotropic(&pf(&["-1", "-1", "t"]).realize().unwrap()).unwrap());
        assert!(!qt_anisotropic(&form(&["t", "-t"])).unwrap());
        assert_eq!(qt_local_witt_index(&form(&["t", "-t", "1", "1"])).unwrap(), 1);
    }

    #[test]
    fn divisibility_examples() {
        let r = pfister_divides_qt(&pf(&["-1", "-1"]), &pf(&["-1", "-1", "t"])).unwrap();
        assert_eq!(r, QtDivisibility::Yes { witness: mono("t") });
        let r = pfister_divides_qt(&pf(&["-1", "-1"]), &pf(&["-1", "-7", "t"])).unwrap();
        assert!(matches!(r, QtDivisibility::No { .. }));
        let r = pfister_divides_qt(&pf(&["-1"]), &pf(&["1", "-1"])).unwrap();
        assert_eq!(r, QtDivisibility::Yes { witness: mono("1") });
        assert!(matches!(pfister_divides_qt(&pf(&["-1"]), &pf(&["1"])), Err(Error::Domain(_))));
    }

    #[test]
    fn t_normalization() {
        let n = normalize_pfister_t(&pf(&["t", "-1", "3t"])).unwrap();
        assert_eq!(n.unit_slots, vec![mono("-1"), mono("-3")]);
        assert_eq!(n.ramified_slot, Some(mono("3t")));
        assert!(qt_isometry(
            &n.to_pfister().realize().unwrap(),
            &pf(&["t", "-1", "3t"]).realize().unwrap()
        )
        .unwrap());
    }
}
