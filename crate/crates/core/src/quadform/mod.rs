//! Diagonal quadratic forms over `Q` and over the monomial fragment of
//! `Q(t)`, Pfister forms, residue forms and Pfister divisibility.
//!
//! Forms over `Q` are handled at the level of classification invariants
//! (dimension, determinant, Hasse invariants, signature); Hasse–Minkowski
//! makes these complete, so no explicit isometries are ever built.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{squarefree_part, RationalNumber, SquareClass};
use crate::error::{Error, Result};

mod monomial;
mod pfister;
mod rational;
mod residue;

pub use monomial::{
    pfister_divides_qt, pfister_divides_qt_within, qt_anisotropic, qt_isometry, qt_local_witt_index,
    normalize_pfister_t, t_adic_residues, Monomial, MonomialForm, QtDivisibility,
};
pub use pfister::{normalize_pfister, pfister_divides, pfister_divides_within, NormalizedPfister, PfisterDivisibility};
pub use rational::{
    anisotropic_part, invariants, is_isometric, is_isotropic, is_isotropic_at, represents, subform,
    witt_equivalent, witt_index, FormInvariants,
};
pub use residue::{adrian_subform, residues_at, AdrianWitness, FpForm, ResiduePair};

/// Entries a diagonal form can carry: square classes of `Q^×`, or
/// monomials `c·t^e` of `Q(t)^×`, both modulo squares.
pub trait FormEntry: Copy + Eq + Ord + fmt::Debug + fmt::Display {
    fn one() -> Self;
    fn mul(self, other: Self) -> Result<Self>;
    fn neg(self) -> Self;
}

impl FormEntry for SquareClass {
    fn one() -> Self {
        SquareClass::ONE
    }

    fn mul(self, other: Self) -> Result<Self> {
        SquareClass::mul(self, other)
    }

    fn neg(self) -> Self {
        SquareClass::neg(self)
    }
}

/// `⟨a_1, …, a_n⟩`, entries kept modulo squares. The empty form is the
/// zero form and is allowed (residue forms are often empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalForm<E = SquareClass> {
    entries: Vec<E>,
}

impl<E: FormEntry> DiagonalForm<E> {
    pub fn new(entries: Vec<E>) -> Self {
        DiagonalForm { entries }
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `self ⊥ other`.
    pub fn perp(&self, other: &DiagonalForm<E>) -> DiagonalForm<E> {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        DiagonalForm { entries }
    }

    /// `c · self`.
    pub fn scale(&self, c: E) -> Result<DiagonalForm<E>> {
        let entries = self.entries.iter().map(|&e| e.mul(c)).collect::<Result<_>>()?;
        Ok(DiagonalForm { entries })
    }

    /// `−self`.
    pub fn negate(&self) -> DiagonalForm<E> {
        DiagonalForm {
            entries: self.entries.iter().map(|&e| e.neg()).collect(),
        }
    }
}

impl DiagonalForm<SquareClass> {
    /// Form from nonzero integers; entries are square-stripped.
    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        let entries = entries.iter().map(|&v| SquareClass::of_int(v)).collect::<Result<_>>()?;
        Ok(DiagonalForm { entries })
    }

    pub fn from_rationals(entries: &[RationalNumber]) -> Result<Self> {
        let entries = entries.iter().map(squarefree_part).collect::<Result<_>>()?;
        Ok(DiagonalForm { entries })
    }

    pub fn values(&self) -> Vec<i64> {
        self.entries.iter().map(|c| c.value()).collect()
    }
}

impl<E: FormEntry> fmt::Display for DiagonalForm<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ">")
    }
}

impl<E: FormEntry> Serialize for DiagonalForm<E> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(|e| e.to_string()))
    }
}

/// The `d`-fold Pfister form `⟨⟨a_1, …, a_d⟩⟩ = ⊗ ⟨1, −a_i⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PfisterForm<E = SquareClass> {
    slots: Vec<E>,
}

impl<E: FormEntry> PfisterForm<E> {
    pub fn new(slots: Vec<E>) -> Self {
        PfisterForm { slots }
    }

    pub fn slots(&self) -> &[E] {
        &self.slots
    }

    pub fn degree(&self) -> usize {
        self.slots.len()
    }

    /// `self ⊗ ⟨⟨c⟩⟩`.
    pub fn with_slot(&self, c: E) -> PfisterForm<E> {
        let mut slots = self.slots.clone();
        slots.push(c);
        PfisterForm { slots }
    }

    /// The `2^d` diagonal entries. Entry `k` is `∏ (−a_i)` over the set
    /// bits `i` of `k`, so `⟨⟨a, b⟩⟩ = ⟨1, −a, −b, ab⟩`.
    pub fn realize(&self) -> Result<DiagonalForm<E>> {
        let mut entries = vec![E::one()];
        for &slot in &self.slots {
            let shifted = entries.iter().map(|&e| e.mul(slot.neg())).collect::<Result<Vec<_>>>()?;
            entries.extend(shifted);
        }
        Ok(DiagonalForm { entries })
    }

    /// `φ'` with `φ ≅ ⟨1⟩ ⊥ φ'`.
    pub fn pure_part(&self) -> Result<DiagonalForm<E>> {
        let mut full = self.realize()?;
        full.entries.remove(0);
        Ok(full)
    }
}

impl<E: FormEntry> fmt::Display for PfisterForm<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<<")?;
        for (i, e) in self.slots.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ">>")
    }
}

impl<E: FormEntry> Serialize for PfisterForm<E> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.slots.iter().map(|e| e.to_string()))
    }
}

pub(crate) fn check_degrees(gamma: usize, phi: usize) -> Result<()> {
    if gamma + 1 != phi {
        return Err(Error::domain(format!(
            "divisor must be a {}-Pfister form for a {phi}-Pfister target, got a {gamma}-Pfister form",
            phi.saturating_sub(1)
        )));
    }
    Ok(())
}
