use serde::Serialize;

use crate::arith::{squarefree_enumeration, SquareClass};
use crate::error::{Error, Result};
use crate::places::{OddPrime, DEFAULT_SEARCH_BOUND};

use super::rational::{is_isometric, subform};
use super::{check_degrees, FormEntry, PfisterForm};

/// Outcome of a divisibility test over `Q`. When `divides` holds, `witness`
/// is the first `c` in canonical order with `φ ≅ γ ⊗ ⟨⟨c⟩⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PfisterDivisibility {
    pub divides: bool,
    pub witness: Option<SquareClass>,
}

/// Whether the `(d−1)`-Pfister form `gamma` divides the `d`-Pfister form `phi`
/// over `Q`.
pub fn pfister_divides(gamma: &PfisterForm, phi: &PfisterForm) -> Result<PfisterDivisibility> {
    pfister_divides_within(gamma, phi, DEFAULT_SEARCH_BOUND)
}

pub fn pfister_divides_within(
    gamma: &PfisterForm,
    phi: &PfisterForm,
    bound: usize,
) -> Result<PfisterDivisibility> {
    check_degrees(gamma.degree(), phi.degree())?;
    let target = phi.realize()?;
    if !subform(&gamma.realize()?, &target)? {
        return Ok(PfisterDivisibility { divides: false, witness: None });
    }
    for c in squarefree_enumeration().take(bound) {
        if is_isometric(&gamma.with_slot(c).realize()?, &target)? {
            return Ok(PfisterDivisibility { divides: true, witness: Some(c) });
        }
    }
    Err(Error::SearchExhausted { bound })
}

/// A Pfister form rewritten at a discrete valuation so that at most one slot
/// has odd valuation: `φ ≅ ⟨⟨unit_slots, ramified_slot⟩⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizedPfister<E = SquareClass> {
    pub unit_slots: Vec<E>,
    pub ramified_slot: Option<E>,
}

impl<E: FormEntry> NormalizedPfister<E> {
    pub fn to_pfister(&self) -> PfisterForm<E> {
        let mut slots = self.unit_slots.clone();
        slots.extend(self.ramified_slot);
        PfisterForm::new(slots)
    }

    /// The Pfister form on the unit slots; its reduction is the first
    /// residue of a ramified form.
    pub fn unit_part(&self) -> PfisterForm<E> {
        PfisterForm::new(self.unit_slots.clone())
    }
}

// ⟨⟨xπ, yπ⟩⟩ ≅ ⟨⟨−xy, yπ⟩⟩, applied left to right.
pub(crate) fn normalize_slots<E: FormEntry>(
    slots: &[E],
    odd_valuation: impl Fn(E) -> bool,
) -> Result<NormalizedPfister<E>> {
    let mut unit_slots = Vec::with_capacity(slots.len());
    let mut pending: Option<E> = None;
    for &slot in slots {
        if !odd_valuation(slot) {
            unit_slots.push(slot);
            continue;
        }
        if let Some(x) = pending {
            unit_slots.push(x.mul(slot)?.neg());
        }
        pending = Some(slot);
    }
    Ok(NormalizedPfister { unit_slots, ramified_slot: pending })
}

/// Normalizes `phi` at the odd prime `p`.
pub fn normalize_pfister(phi: &PfisterForm, p: OddPrime) -> Result<NormalizedPfister> {
    let p = p.get() as i64;
    normalize_slots(phi.slots(), |c: SquareClass| c.value() % p == 0)
}
