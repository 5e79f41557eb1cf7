use serde::Serialize;

use crate::arith::{squarefree_enumeration, SquareClass};
use crate::brauer::{is_isomorphic, QuaternionAlgebra};
use crate::error::{Error, Result};
use crate::places::DEFAULT_SEARCH_BOUND;
use crate::quadform::{anisotropic_part, invariants, is_isotropic, represents, witt_equivalent, DiagonalForm, PfisterForm};

/// The Witt-level identity `φ1 − φ2 = −a1·⟨⟨a1 a2, b⟩⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlbertCheck {
    pub gamma: PfisterForm,
    pub scale: SquareClass,
    /// Dimension of the anisotropic part of `φ1 ⊥ −φ2`.
    pub anisotropic_dim: usize,
    pub witt_class_matches: bool,
}

/// Similarity exclusions for `q`: a 4-dimensional form similar to `q` has
/// the same determinant class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exclusions {
    pub phi1: bool,
    pub phi2: bool,
    pub gamma: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RostStepReport {
    pub c: SquareClass,
    /// `i` with `−c` represented by `φ'_i` and not by `φ'_{i+1}`, 1-based.
    pub i: usize,
    pub q: DiagonalForm,
    pub anisotropic: bool,
    pub determinant: SquareClass,
    pub determinant_nonsquare: bool,
    pub not_similar: Exclusions,
    pub albert: AlbertCheck,
}

impl RostStepReport {
    pub fn all_checks_pass(&self) -> bool {
        self.anisotropic
            && self.determinant == self.c
            && self.determinant_nonsquare
            && self.not_similar.phi1
            && self.not_similar.phi2
            && self.not_similar.gamma
            && self.albert.witt_class_matches
            && self.albert.anisotropic_dim == 4
    }
}

pub fn rost_step(q1: &QuaternionAlgebra, q2: &QuaternionAlgebra) -> Result<RostStepReport> {
    rost_step_within(q1, q2, DEFAULT_SEARCH_BOUND)
}

/// One step of the tower construction for `Q1 = (a1, b)`, `Q2 = (a2, b)`:
/// a class `c` with `Q(√c)` in exactly one algebra, and the form
/// `q = ⟨c⟩ ⊥ φ'_{i+1}` whose function field keeps both algebras distinct.
pub fn rost_step_within(q1: &QuaternionAlgebra, q2: &QuaternionAlgebra, bound: usize) -> Result<RostStepReport> {
    if q1.b != q2.b {
        return Err(Error::domain(format!("{q1} and {q2} do not share the second slot")));
    }
    for q in [q1, q2] {
        if !q.is_division() {
            return Err(Error::domain(format!("{q} is split")));
        }
    }
    if is_isomorphic(q1, q2) {
        return Err(Error::domain(format!("{q1} and {q2} are isomorphic")));
    }
    let b = q1.b;
    let phi = [PfisterForm::new(vec![q1.a, b]), PfisterForm::new(vec![q2.a, b])];
    let pure = [phi[0].pure_part()?, phi[1].pure_part()?];

    let mut found = None;
    'search: for c in squarefree_enumeration().take(bound).filter(|c| !c.is_one()) {
        for i in 0..2 {
            if represents(&pure[i], c.neg())? && !represents(&pure[1 - i], c.neg())? {
                found = Some((c, i));
                break 'search;
            }
        }
    }
    let (c, i) = found.ok_or(Error::SearchExhausted { bound })?;

    let q = DiagonalForm::new(vec![c]).perp(&pure[1 - i]);
    let determinant = invariants(&q)?.determinant;
    let gamma = PfisterForm::new(vec![q1.a.mul(q2.a)?, b]);
    let det_of = |p: &PfisterForm| -> Result<SquareClass> { Ok(invariants(&p.realize()?)?.determinant) };
    let not_similar = Exclusions {
        phi1: det_of(&phi[0])? != determinant,
        phi2: det_of(&phi[1])? != determinant,
        gamma: det_of(&gamma)? != determinant,
    };

    let albert_form = phi[0].realize()?.perp(&phi[1].realize()?.negate());
    let scale = q1.a.neg();
    let albert = AlbertCheck {
        anisotropic_dim: anisotropic_part(&albert_form)?.dimension,
        witt_class_matches: witt_equivalent(&albert_form, &gamma.realize()?.scale(scale)?)?,
        gamma,
        scale,
    };

    Ok(RostStepReport {
        c,
        i: i + 1,
        anisotropic: !is_isotropic(&q)?,
        determinant,
        determinant_nonsquare: !determinant.is_one(),
        q,
        not_similar,
        albert,
    })
}
