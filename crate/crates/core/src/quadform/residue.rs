use serde::Serialize;

use crate::arith::{jacobi, RationalNumber, SquareClass};
use crate::error::{Error, Result};
use crate::places::{OddPrime, Place};

use super::rational::is_isotropic_at;
use super::DiagonalForm;

/// A diagonal form over the finite field `F_p`, entries in `[1, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FpForm {
    pub p: u64,
    pub entries: Vec<u64>,
}

impl FpForm {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    fn determinant(&self) -> u64 {
        self.entries.iter().fold(1u64, |acc, &e| acc * e % self.p)
    }

    fn is_square(&self, x: u64) -> bool {
        jacobi(x as i64, self.p) == 1
    }

    /// Over a finite field every form of dimension ≥ 3 is isotropic.
    pub fn is_anisotropic(&self) -> bool {
        match self.dim() {
            0 | 1 => true,
            2 => {
                let minus_det = (self.p - self.determinant()) % self.p;
                !self.is_square(minus_det)
            }
            _ => false,
        }
    }

    /// Zero in the Witt ring of `F_p`: even dimension and discriminant
    /// `(−1)^{n/2} det` a square.
    pub fn is_witt_trivial(&self) -> bool {
        if self.dim() % 2 == 1 {
            return false;
        }
        let mut disc = self.determinant();
        if (self.dim() / 2) % 2 == 1 {
            disc = (self.p - disc) % self.p;
        }
        self.dim() == 0 || self.is_square(disc)
    }

    /// Forms over `F_p` are classified by dimension and determinant.
    pub fn is_isometric(&self, other: &FpForm) -> bool {
        self.p == other.p
            && self.dim() == other.dim()
            && (self.dim() == 0 || self.is_square(self.determinant() * other.determinant() % self.p))
    }
}

/// First and second residue forms at a discrete valuation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResiduePair<F> {
    pub first: F,
    pub second: F,
}

impl ResiduePair<FpForm> {
    /// A form is ramified when its second residue is Witt-nontrivial.
    pub fn is_ramified(&self) -> bool {
        !self.second.is_witt_trivial()
    }
}

fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Residue forms of `q` at an odd prime. Entries are squarefree, hence of
/// valuation 0 or 1.
pub fn residues_at(q: &DiagonalForm, p: OddPrime) -> ResiduePair<FpForm> {
    let pp = p.get();
    let mut first = Vec::new();
    let mut second = Vec::new();
    for e in q.entries() {
        let v = e.value();
        if v % pp as i64 == 0 {
            second.push(reduce(v / pp as i64, pp));
        } else {
            first.push(reduce(v, pp));
        }
    }
    ResiduePair {
        first: FpForm { p: pp, entries: first },
        second: FpForm { p: pp, entries: second },
    }
}

/// A two-dimensional subform `⟨r, s⟩` of a unit form, isotropic over `Q_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdrianWitness {
    /// Lexicographically least nontrivial zero of the reduced form,
    /// components in `[0, p)`.
    pub residue_zero: Vec<u64>,
    /// 0-based index of the first nonzero component.
    pub pivot: usize,
    /// Integer lifts `t_i` of the residue zero.
    pub lifts: Vec<i64>,
    /// `r = Σ_{i ≤ pivot} a_i t_i²`.
    #[serde(serialize_with = "ser_rational")]
    pub r: RationalNumber,
    /// `s = Σ_{i > pivot} a_i t_i²`.
    #[serde(serialize_with = "ser_rational")]
    pub s: RationalNumber,
}

fn ser_rational<S: serde::Serializer>(q: &RationalNumber, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// Splits off a binary subform `⟨r, s⟩` of `psi` that is isotropic over
/// `Q_p`, following the partial-sum construction on a residue zero.
pub fn adrian_subform(psi: &DiagonalForm, p: OddPrime) -> Result<AdrianWitness> {
    let pp = p.get();
    let entries = psi.values();
    if entries.iter().any(|&a| a % pp as i64 == 0) {
        return Err(Error::domain(format!("{psi} has an entry that is not a unit at {pp}")));
    }
    if !is_isotropic_at(psi, Place::OddPrime(p))? {
        return Err(Error::domain(format!("{psi} is anisotropic over Q_{pp}")));
    }
    let reduced: Vec<u64> = entries.iter().map(|&a| reduce(a, pp)).collect();
    let zero = least_residue_zero(&reduced, pp)
        .expect("isotropic unit form has an isotropic reduction");
    let pivot = zero.iter().position(|&x| x != 0).expect("nontrivial zero");
    let lifts: Vec<i64> = zero.iter().map(|&x| x as i64).collect();
    let partial = |range: std::ops::Range<usize>| -> RationalNumber {
        let total: i64 = range.map(|i| entries[i] * lifts[i] * lifts[i]).sum();
        RationalNumber::from_integer(total.into())
    };
    let r = partial(0..pivot + 1);
    let s = partial(pivot + 1..entries.len());
    Ok(AdrianWitness {
        residue_zero: zero,
        pivot,
        lifts,
        r,
        s,
    })
}

// Odometer over [0, p)^n in lexicographic order, skipping the zero vector.
fn least_residue_zero(coeffs: &[u64], p: u64) -> Option<Vec<u64>> {
    let n = coeffs.len();
    let mut x = vec![0u64; n];
    loop {
        // advance (last coordinate fastest)
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
        }
        let value = coeffs.iter().zip(&x).fold(0u64, |acc, (&a, &xi)| (acc + a * (xi * xi % p)) % p);
        if value == 0 {
            return Some(x);
        }
    }
}

impl AdrianWitness {
    /// `−r·s` as a square class; `⟨r, s⟩` is hyperbolic over `Q_p` exactly
    /// when this is a local square.
    pub fn minus_rs(&self) -> Result<SquareClass> {
        crate::arith::squarefree_part(&(-(&self.r * &self.s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::places::is_local_square;
    use crate::quadform::PfisterForm;

    fn form(v: &[i64]) -> DiagonalForm {
        DiagonalForm::from_ints(v).unwrap()
    }

    fn odd(p: u64) -> OddPrime {
        OddPrime::new(p).unwrap()
    }

    fn pf(slots: &[i64]) -> DiagonalForm {
        PfisterForm::new(slots.iter().map(|&v| SquareClass::new(v).unwrap()).collect())
            .realize()
            .unwrap()
    }

    #[test]
    fn residue_examples() {
        let r = residues_at(&pf(&[-1, 3]), odd(3));
        assert_eq!(r.first.entries, vec![1, 1]);
        assert_eq!(r.second.entries, vec![2, 2]); // <-1, -1> over F_3
        assert!(r.second.is_anisotropic());
        assert!(r.is_ramified());

        let r = residues_at(&pf(&[7, 3]), odd(3));
        assert_eq!(r.first.entries, vec![1, 2]); // <1, -7>
        assert_eq!(r.second.entries, vec![2, 1]); // <-1, 7>
        assert!(!r.is_ramified());

        let r = residues_at(&form(&[1, 2, 5]), odd(3));
        assert!(r.second.entries.is_empty());
        assert!(!r.is_ramified());
    }

    #[test]
    fn adrian_examples() {
        let w = adrian_subform(&form(&[1, 1, 1]), odd(3)).unwrap();
        assert_eq!(w.residue_zero, vec![1, 1, 1]);
        assert_eq!(w.pivot, 0);
        assert_eq!((w.r.to_integer(), w.s.to_integer()), (1.into(), 2.into()));
        assert!(is_local_square(w.minus_rs().unwrap(), Place::odd(3).unwrap()));

        // lexicographic order puts (1,0,1) before (1,1,0)
        let w = adrian_subform(&form(&[1, -1, 5]), odd(3)).unwrap();
        assert_eq!(w.residue_zero, vec![1, 0, 1]);
        assert_eq!((w.r.to_integer(), w.s.to_integer()), (1.into(), 5.into()));

        // (0,1,2) precedes (3,1,1): 2 + 3·4 = 14 ≡ 0 mod 7
        let w = adrian_subform(&form(&[1, 2, 3]), odd(7)).unwrap();
        assert_eq!(w.residue_zero, vec![0, 1, 2]);
        assert_eq!(w.pivot, 1);
        assert_eq!((w.r.to_integer(), w.s.to_integer()), (2.into(), 12.into()));
        assert!(is_local_square(w.minus_rs().unwrap(), Place::odd(7).unwrap()));
    }

    #[test]
    fn adrian_preconditions() {
        assert!(matches!(adrian_subform(&form(&[1, 3, 1]), odd(3)), Err(Error::Domain(_))));
        // <1, 1> is anisotropic over Q_3
        assert!(matches!(adrian_subform(&form(&[1, 1]), odd(3)), Err(Error::Domain(_))));
    }

    #[test]
    fn fp_witt_classes() {
        let f = |e: Vec<u64>| FpForm { p: 5, entries: e };
        assert!(f(vec![1, 4]).is_witt_trivial()); // <1,-1>
        assert!(f(vec![1, 1]).is_witt_trivial()); // -1 is a square mod 5
        assert!(!f(vec![1, 2]).is_witt_trivial());
        assert!(f(vec![]).is_witt_trivial());
        assert!(f(vec![1, 2]).is_isometric(&f(vec![3, 4])));
        assert!(!f(vec![1, 1]).is_isometric(&f(vec![1, 2])));
    }
}
