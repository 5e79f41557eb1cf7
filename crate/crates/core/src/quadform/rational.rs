use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::arith::SquareClass;
use crate::brauer::hilbert;
use crate::error::{Error, Result};
use crate::places::{is_local_square, support, Place};

use super::DiagonalForm;

/// Hasse–Minkowski classification data of a form over `Q`.
///
/// `hasse` lists only the places where the Hasse invariant
/// `∏_{i<j} (a_i, a_j)_v` is `−1`, so two invariant sets can be compared
/// with `==`. The values are kept consistent when hyperbolic planes are
/// split off, which lets the Witt-index computation run on invariants alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormInvariants {
    pub dimension: usize,
    pub determinant: SquareClass,
    pub hasse: BTreeMap<Place, i8>,
    pub signature: i64,
}

impl FormInvariants {
    pub fn hasse_at(&self, v: Place) -> i8 {
        self.hasse.get(&v).copied().unwrap_or(1)
    }

    // Places where local isotropy can fail for dimension ≥ 3.
    fn critical_places(&self) -> BTreeSet<Place> {
        let mut out = support(&[self.determinant]);
        out.extend(self.hasse.keys().copied());
        out
    }

    /// Local isotropy from the invariants (Serre's criteria).
    pub fn isotropic_at(&self, v: Place) -> bool {
        let n = self.dimension;
        if v == Place::Real {
            return n >= 2 && (self.signature.unsigned_abs() as usize) < n;
        }
        let d = self.determinant;
        match n {
            0 | 1 => false,
            2 => is_local_square(d.neg(), v),
            3 => hilbert(SquareClass::MINUS_ONE, d.neg(), v) == self.hasse_at(v),
            4 => !is_local_square(d, v) || self.hasse_at(v) == hilbert(SquareClass::MINUS_ONE, SquareClass::MINUS_ONE, v),
            _ => true,
        }
    }

    pub fn isotropic(&self) -> bool {
        match self.dimension {
            0 | 1 => false,
            2 => self.determinant == SquareClass::MINUS_ONE,
            _ => self.critical_places().into_iter().all(|v| self.isotropic_at(v)),
        }
    }

    /// Invariants of `q1` where `q ≅ H ⊥ q1`. Uses
    /// `s(q) = s(q1) · (−1, d(q1))`, since `d(H) = −1` and `s(H) = 1`.
    fn strip_hyperbolic_plane(&self) -> Result<FormInvariants> {
        debug_assert!(self.dimension >= 2);
        let d1 = self.determinant.neg();
        let mut places = self.critical_places();
        places.extend(support(&[d1]));
        let mut hasse = BTreeMap::new();
        for v in places {
            let s = self.hasse_at(v) * hilbert(SquareClass::MINUS_ONE, d1, v);
            if s == -1 {
                hasse.insert(v, -1);
            }
        }
        Ok(FormInvariants {
            dimension: self.dimension - 2,
            determinant: d1,
            hasse,
            signature: self.signature,
        })
    }

    /// Splits off hyperbolic planes until anisotropic; returns the Witt
    /// index and the invariants of the anisotropic part.
    pub fn decompose(&self) -> Result<(usize, FormInvariants)> {
        let mut cur = self.clone();
        let mut index = 0;
        while cur.isotropic() {
            cur = cur.strip_hyperbolic_plane()?;
            index += 1;
        }
        Ok((index, cur))
    }
}

pub fn invariants(q: &DiagonalForm) -> Result<FormInvariants> {
    let entries = q.entries();
    let mut determinant = SquareClass::ONE;
    // prefix[i] = a_0 ⋯ a_{i-1}; s = ∏_i (a_i, prefix[i]) equals ∏_{i<j}
    let mut prefixes = Vec::with_capacity(entries.len());
    for &a in entries {
        prefixes.push(determinant);
        determinant = determinant.mul(a)?;
    }
    let mut hasse = BTreeMap::new();
    for v in support(entries) {
        let s: i8 = entries.iter().zip(&prefixes).map(|(&a, &d)| hilbert(a, d, v)).product();
        if s == -1 {
            hasse.insert(v, -1);
        }
    }
    let positive = entries.iter().filter(|a| a.is_positive()).count() as i64;
    Ok(FormInvariants {
        dimension: entries.len(),
        determinant,
        hasse,
        signature: 2 * positive - entries.len() as i64,
    })
}

/// Global isotropy over `Q`.
pub fn is_isotropic(q: &DiagonalForm) -> Result<bool> {
    Ok(invariants(q)?.isotropic())
}

/// Isotropy over the completion `Q_v`.
pub fn is_isotropic_at(q: &DiagonalForm, v: Place) -> Result<bool> {
    Ok(invariants(q)?.isotropic_at(v))
}

pub fn witt_index(q: &DiagonalForm) -> Result<usize> {
    Ok(invariants(q)?.decompose()?.0)
}

/// Invariants of the anisotropic part of `q`.
pub fn anisotropic_part(q: &DiagonalForm) -> Result<FormInvariants> {
    Ok(invariants(q)?.decompose()?.1)
}

pub fn is_isometric(q1: &DiagonalForm, q2: &DiagonalForm) -> Result<bool> {
    Ok(invariants(q1)? == invariants(q2)?)
}

/// `q1` and `q2` have the same class in the Witt ring of `Q`.
pub fn witt_equivalent(q1: &DiagonalForm, q2: &DiagonalForm) -> Result<bool> {
    let diff = q1.perp(&q2.negate());
    Ok(2 * witt_index(&diff)? == diff.dim())
}

/// Whether `phi ≅ gamma ⊥ rho` for some `rho`: decided by
/// `witt_index(phi ⊥ −gamma) ≥ dim gamma`.
pub fn subform(gamma: &DiagonalForm, phi: &DiagonalForm) -> Result<bool> {
    if gamma.dim() > phi.dim() {
        return Err(Error::domain(format!(
            "subform of dimension {} cannot fit in dimension {}",
            gamma.dim(),
            phi.dim()
        )));
    }
    Ok(witt_index(&phi.perp(&gamma.negate()))? >= gamma.dim())
}

/// Whether `q` represents the class `x` over `Q`.
pub fn represents(q: &DiagonalForm, x: SquareClass) -> Result<bool> {
    is_isotropic(&q.perp(&DiagonalForm::new(vec![x.neg()])))
}
