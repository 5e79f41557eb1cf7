//! Quaternion algebras over `Q`: local Hilbert symbols, tame residues,
//! ramification, isomorphism and quadratic-subfield tests.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::arith::{self, split_valuation, SquareClass};
use crate::error::{Error, Result};
use crate::places::{is_local_square, support, OddPrime, Place};
use crate::quadform::{self, DiagonalForm};

/// The quaternion algebra `(a, b)` with `i² = a`, `j² = b`, `ij = −ji`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuaternionAlgebra {
    pub a: SquareClass,
    pub b: SquareClass,
}

impl QuaternionAlgebra {
    pub fn new(a: SquareClass, b: SquareClass) -> Self {
        QuaternionAlgebra { a, b }
    }

    /// Builds `(a, b)` from arbitrary nonzero integers.
    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Ok(QuaternionAlgebra::new(SquareClass::of_int(a)?, SquareClass::of_int(b)?))
    }

    pub fn is_division(&self) -> bool {
        !ram_set(self).is_empty()
    }

    /// Norm form `⟨⟨a, b⟩⟩ = ⟨1, −a, −b, ab⟩`.
    pub fn norm_form(&self) -> Result<DiagonalForm> {
        quadform::PfisterForm::new(vec![self.a, self.b]).realize()
    }

    /// Pure part `⟨−a, −b, ab⟩` of the norm form.
    pub fn pure_norm_form(&self) -> Result<DiagonalForm> {
        quadform::PfisterForm::new(vec![self.a, self.b]).pure_part()
    }
}

impl fmt::Display for QuaternionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

// ε(u) = (u−1)/2 and ω(u) = (u²−1)/8 mod 2, for odd u.
fn eps(u: i64) -> u32 {
    (((u.rem_euclid(4)) - 1) / 2) as u32
}

fn omega(u: i64) -> u32 {
    match u.rem_euclid(8) {
        1 | 7 => 0,
        _ => 1,
    }
}

/// Local Hilbert symbol `(a, b)_v`: `+1` iff `(a, b) ⊗ Q_v` is split.
pub fn hilbert(a: SquareClass, b: SquareClass, v: Place) -> i8 {
    match v {
        Place::Real => {
            if !a.is_positive() && !b.is_positive() {
                -1
            } else {
                1
            }
        }
        Place::OddPrime(p) => {
            let p = p.get();
            let (alpha, u) = split_valuation(a.value(), p);
            let (beta, w) = split_valuation(b.value(), p);
            let mut s = 1i8;
            if alpha % 2 == 1 && beta % 2 == 1 && p % 4 == 3 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= arith::jacobi(u, p);
            }
            if alpha % 2 == 1 {
                s *= arith::jacobi(w, p);
            }
            s
        }
        Place::Dyadic => {
            let (alpha, u) = split_valuation(a.value(), 2);
            let (beta, w) = split_valuation(b.value(), 2);
            let e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    }
}

/// The tame residue of `(a, b)` at an odd prime `p`, as a unit class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TameResidue {
    /// A `p`-adic unit whose reduction names the residue class
    /// `(−1)^{v(a)v(b)} a^{v(b)} b^{−v(a)}` in `F_p^× / F_p^×2`.
    pub unit: SquareClass,
    pub nontrivial: bool,
}

pub fn tame_residue(a: SquareClass, b: SquareClass, p: OddPrime) -> TameResidue {
    let (alpha, u) = split_valuation(a.value(), p.get());
    let (beta, w) = split_valuation(b.value(), p.get());
    // u, w are squarefree and prime to p, so their product stays in range
    let mut unit = 1i64;
    if beta % 2 == 1 {
        unit *= u;
    }
    if alpha % 2 == 1 {
        unit *= w;
    }
    if alpha % 2 == 1 && beta % 2 == 1 {
        unit = -unit;
    }
    let unit = SquareClass::of_int(unit).expect("nonzero");
    TameResidue {
        unit,
        nontrivial: arith::jacobi(unit.value(), p.get()) == -1,
    }
}

/// The finite set of places where an algebra is not split.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RamificationSet {
    places: BTreeSet<Place>,
}

impl RamificationSet {
    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn contains(&self, v: Place) -> bool {
        self.places.contains(&v)
    }

    /// Places in order, real place last.
    pub fn iter(&self) -> impl Iterator<Item = Place> + '_ {
        self.places.iter().copied()
    }

    pub fn symmetric_difference<'a>(&'a self, other: &'a RamificationSet) -> BTreeSet<Place> {
        self.places.symmetric_difference(&other.places).copied().collect()
    }

    pub fn union<'a>(&'a self, other: &'a RamificationSet) -> BTreeSet<Place> {
        self.places.union(&other.places).copied().collect()
    }
}

pub fn ram_set(d: &QuaternionAlgebra) -> RamificationSet {
    let places = support(&[d.a, d.b])
        .into_iter()
        .filter(|&v| hilbert(d.a, d.b, v) == -1)
        .collect();
    RamificationSet { places }
}

pub fn is_isomorphic(d1: &QuaternionAlgebra, d2: &QuaternionAlgebra) -> bool {
    ram_set(d1) == ram_set(d2)
}

fn check_embedding_inputs(c: SquareClass, d: &QuaternionAlgebra) -> Result<RamificationSet> {
    if c.is_one() {
        return Err(Error::domain("Q(√c) is not a quadratic field when c is a square"));
    }
    let ram = ram_set(d);
    if ram.is_empty() {
        // every quadratic field splits a split algebra; the question is void
        return Err(Error::domain(format!("{d} is split, not a division algebra")));
    }
    Ok(ram)
}

/// Whether `Q(√c)` is a maximal subfield of the division algebra `d`.
pub fn embeds(c: SquareClass, d: &QuaternionAlgebra) -> Result<bool> {
    let ram = check_embedding_inputs(c, d)?;
    let all = ram.iter().all(|v| !is_local_square(c, v));
    Ok(all)
}

/// Same question as [`embeds`], answered through the norm form: `Q(√c)`
/// embeds iff `−c` is represented by the pure part `⟨−a, −b, ab⟩`.
pub fn embeds_via_normform(c: SquareClass, d: &QuaternionAlgebra) -> Result<bool> {
    check_embedding_inputs(c, d)?;
    quadform::represents(&d.pure_norm_form()?, c.neg())
}

/// Rewrites `(a, b)` as an isomorphic symbol whose first slot is a unit at `p`.
pub fn normalize_symbol(a: SquareClass, b: SquareClass, p: OddPrime) -> Result<(SquareClass, SquareClass)> {
    let divides = |c: SquareClass| c.value() % p.get() as i64 == 0;
    match (divides(a), divides(b)) {
        (false, _) => Ok((a, b)),
        (true, false) => Ok((b, a)),
        // (a, b) ≅ (a·(−b)^{-1}, b) since (−b, b) is split
        (true, true) => Ok((a.mul(b)?.neg(), b)),
    }
}

/// Evidence that a class in `Br_2(Q)` is detected away from the dyadic
/// place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "place", rename_all = "kebab-case")]
pub enum H2uEvidence {
    ZeroClass,
    NondyadicRamified(Place),
    RealObstruction,
}

pub fn h2u_witness(d: &QuaternionAlgebra) -> H2uEvidence {
    let ram = ram_set(d);
    if ram.is_empty() {
        return H2uEvidence::ZeroClass;
    }
    if let Some(v) = ram.iter().find(|v| matches!(v, Place::OddPrime(_))) {
        return H2uEvidence::NondyadicRamified(v);
    }
    // only {2, ∞} is left: reciprocity forbids a lone dyadic place
    debug_assert!(ram.contains(Place::Real) && ram.len() == 2);
    H2uEvidence::RealObstruction
}

/// Structure of `(a, b) ⊗ Q_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DyadicLocalType {
    Split,
    /// The unique division algebra over `Q_2`; its residue algebra is the
    /// separable quadratic extension `F_4 / F_2`.
    DivisionSeparableResidue,
}

pub fn dyadic_local_type(d: &QuaternionAlgebra) -> DyadicLocalType {
    if hilbert(d.a, d.b, Place::Dyadic) == 1 {
        DyadicLocalType::Split
    } else {
        DyadicLocalType::DivisionSeparableResidue
    }
}
