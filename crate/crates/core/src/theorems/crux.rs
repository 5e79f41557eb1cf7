use serde::Serialize;

use crate::arith::{squarefree_part, SquareClass};
use crate::error::{Error, Result};
use crate::places::{OddPrime, Place, DEFAULT_SEARCH_BOUND};
use crate::quadform::{
    adrian_subform, is_isometric, is_isotropic, is_isotropic_at, normalize_pfister, normalize_pfister_t,
    pfister_divides_qt_within, pfister_divides_within, qt_anisotropic, residues_at, t_adic_residues, witt_index, AdrianWitness,
    DiagonalForm, FormEntry, Monomial, NormalizedPfister, PfisterForm,
};

use super::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CruxCase {
    /// Exactly one input is ramified.
    OneRamified,
    /// Both ramified, with non-isometric residue Pfister forms.
    DifferentRamification,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CruxBranch {
    /// The unramified input stays anisotropic over the completion.
    LocallyAnisotropic,
    /// The unramified input is locally hyperbolic; a binary subform found
    /// from a residue zero gives the divisor.
    Adrian,
    /// Case of different ramification: the unit part of the first input.
    UnitPart,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "E: FormEntry")]
pub struct CruxReport<E = SquareClass> {
    pub gamma: PfisterForm<E>,
    pub case: CruxCase,
    pub branch: CruxBranch,
    pub divides: Side,
    /// `[γ | φ1, γ | φ2]`.
    pub verification: [bool; 2],
    pub adrian: Option<AdrianWitness>,
}

// What crux needs from a base field with a nondyadic valuation.
trait CruxBase {
    type Entry: FormEntry;
    fn describe(&self) -> String;
    fn anisotropic(&self, phi: &PfisterForm<Self::Entry>) -> Result<bool>;
    fn normalize(&self, phi: &PfisterForm<Self::Entry>) -> Result<NormalizedPfister<Self::Entry>>;
    fn ramified(&self, n: &NormalizedPfister<Self::Entry>) -> Result<bool>;
    fn residues_isometric(&self, n1: &NormalizedPfister<Self::Entry>, n2: &NormalizedPfister<Self::Entry>) -> Result<bool>;
    fn locally_anisotropic(&self, phi: &PfisterForm<Self::Entry>) -> Result<bool>;
    fn adrian_divisor(
        &self,
        unramified: &NormalizedPfister<Self::Entry>,
    ) -> Result<(PfisterForm<Self::Entry>, AdrianWitness)>;
    fn divides(&self, gamma: &PfisterForm<Self::Entry>, phi: &PfisterForm<Self::Entry>) -> Result<bool>;
}

struct Rational {
    p: OddPrime,
    bound: usize,
}

impl CruxBase for Rational {
    type Entry = SquareClass;

    fn describe(&self) -> String {
        format!("Q at {}", self.p.get())
    }

    fn anisotropic(&self, phi: &PfisterForm) -> Result<bool> {
        Ok(!is_isotropic(&phi.realize()?)?)
    }

    fn normalize(&self, phi: &PfisterForm) -> Result<NormalizedPfister> {
        normalize_pfister(phi, self.p)
    }

    fn ramified(&self, n: &NormalizedPfister) -> Result<bool> {
        Ok(residues_at(&n.to_pfister().realize()?, self.p).is_ramified())
    }

    fn residues_isometric(&self, n1: &NormalizedPfister, n2: &NormalizedPfister) -> Result<bool> {
        let r1 = residues_at(&n1.unit_part().realize()?, self.p);
        let r2 = residues_at(&n2.unit_part().realize()?, self.p);
        Ok(r1.first.is_isometric(&r2.first))
    }

    fn locally_anisotropic(&self, phi: &PfisterForm) -> Result<bool> {
        Ok(!is_isotropic_at(&phi.realize()?, Place::OddPrime(self.p))?)
    }

    fn adrian_divisor(&self, unramified: &NormalizedPfister) -> Result<(PfisterForm, AdrianWitness)> {
        if unramified.unit_slots.len() + unramified.ramified_slot.iter().count() != 2 {
            return Err(Error::domain(
                "the locally hyperbolic branch is only constructive for 2-Pfister forms",
            ));
        }
        let p = self.p.get() as i64;
        let units: Vec<SquareClass> = unramified
            .to_pfister()
            .realize()?
            .entries()
            .iter()
            .copied()
            .filter(|c| c.value() % p != 0)
            .collect();
        let w = adrian_subform(&DiagonalForm::new(units), self.p)?;
        // ⟨r, s⟩ ⊂ φ and φ is round, so r·⟨r, s⟩ = ⟨⟨−rs⟩⟩ ⊂ φ
        let c = squarefree_part(&(-(&w.r * &w.s)))?;
        Ok((PfisterForm::new(vec![c]), w))
    }

    fn divides(&self, gamma: &PfisterForm, phi: &PfisterForm) -> Result<bool> {
        Ok(pfister_divides_within(gamma, phi, self.bound)?.divides)
    }
}

struct TAdic {
    bound: usize,
}

fn witt_trivial(q: &DiagonalForm) -> Result<bool> {
    Ok(2 * witt_index(q)? == q.dim())
}

impl CruxBase for TAdic {
    type Entry = Monomial;

    fn describe(&self) -> String {
        "Q(t) at t".into()
    }

    fn anisotropic(&self, phi: &PfisterForm<Monomial>) -> Result<bool> {
        qt_anisotropic(&phi.realize()?)
    }

    fn normalize(&self, phi: &PfisterForm<Monomial>) -> Result<NormalizedPfister<Monomial>> {
        normalize_pfister_t(phi)
    }

    fn ramified(&self, n: &NormalizedPfister<Monomial>) -> Result<bool> {
        Ok(!witt_trivial(&t_adic_residues(&n.to_pfister().realize()?).second)?)
    }

    fn residues_isometric(&self, n1: &NormalizedPfister<Monomial>, n2: &NormalizedPfister<Monomial>) -> Result<bool> {
        let r1 = t_adic_residues(&n1.unit_part().realize()?).first;
        let r2 = t_adic_residues(&n2.unit_part().realize()?).first;
        is_isometric(&r1, &r2)
    }

    fn locally_anisotropic(&self, phi: &PfisterForm<Monomial>) -> Result<bool> {
        // Springer: the same test as over Q(t) itself
        qt_anisotropic(&phi.realize()?)
    }

    fn adrian_divisor(&self, _: &NormalizedPfister<Monomial>) -> Result<(PfisterForm<Monomial>, AdrianWitness)> {
        // an unramified anisotropic monomial Pfister form is anisotropic over Q((t))
        Err(Error::domain("an anisotropic unramified form over Q(t) is never hyperbolic over Q((t))"))
    }

    fn divides(&self, gamma: &PfisterForm<Monomial>, phi: &PfisterForm<Monomial>) -> Result<bool> {
        pfister_divides_qt_within(gamma, phi, self.bound)?
            .conclusive()
            .ok_or_else(|| Error::Inconclusive(format!("could not decide whether {gamma} divides {phi} over Q(t)")))
    }
}

/// A `(d−1)`-Pfister form dividing exactly one of two anisotropic
/// `d`-Pfister forms over `Q`, read off at the odd prime `p`.
pub fn crux_witness(phi1: &PfisterForm, phi2: &PfisterForm, p: OddPrime) -> Result<CruxReport> {
    crux_witness_within(phi1, phi2, p, DEFAULT_SEARCH_BOUND)
}

pub fn crux_witness_within(phi1: &PfisterForm, phi2: &PfisterForm, p: OddPrime, bound: usize) -> Result<CruxReport> {
    crux(&Rational { p, bound }, phi1, phi2)
}

/// The same construction over `Q(t)` at the `t`-adic valuation, for
/// monomial Pfister forms.
pub fn crux_witness_qt(phi1: &PfisterForm<Monomial>, phi2: &PfisterForm<Monomial>) -> Result<CruxReport<Monomial>> {
    crux_witness_qt_within(phi1, phi2, DEFAULT_SEARCH_BOUND)
}

pub fn crux_witness_qt_within(
    phi1: &PfisterForm<Monomial>,
    phi2: &PfisterForm<Monomial>,
    bound: usize,
) -> Result<CruxReport<Monomial>> {
    crux(&TAdic { bound }, phi1, phi2)
}

fn crux<B: CruxBase>(base: &B, phi1: &PfisterForm<B::Entry>, phi2: &PfisterForm<B::Entry>) -> Result<CruxReport<B::Entry>> {
    let d = phi1.degree();
    if d < 2 || phi2.degree() != d {
        return Err(Error::domain(format!(
            "need two d-Pfister forms with d ≥ 2, got degrees {} and {}",
            d,
            phi2.degree()
        )));
    }
    for phi in [phi1, phi2] {
        if !base.anisotropic(phi)? {
            return Err(Error::domain(format!("{phi} is isotropic over {}", base.describe())));
        }
    }
    let phis = [phi1, phi2];
    let n = [base.normalize(phi1)?, base.normalize(phi2)?];
    let ramified = [base.ramified(&n[0])?, base.ramified(&n[1])?];

    let (gamma, case, branch, adrian) = match ramified {
        [true, false] | [false, true] => {
            let r = if ramified[0] { 0 } else { 1 };
            let u = 1 - r;
            if base.locally_anisotropic(phis[u])? {
                let mut slots = n[r].unit_slots[1..].to_vec();
                slots.extend(n[r].ramified_slot);
                (PfisterForm::new(slots), CruxCase::OneRamified, CruxBranch::LocallyAnisotropic, None)
            } else {
                let (gamma, w) = base.adrian_divisor(&n[u])?;
                (gamma, CruxCase::OneRamified, CruxBranch::Adrian, Some(w))
            }
        }
        [true, true] if !base.residues_isometric(&n[0], &n[1])? => (
            n[0].unit_part(),
            CruxCase::DifferentRamification,
            CruxBranch::UnitPart,
            None,
        ),
        _ => {
            return Err(Error::domain(format!(
                "{phi1} and {phi2} are neither one-sided nor differently ramified over {}",
                base.describe()
            )))
        }
    };

    let verification = [base.divides(&gamma, phi1)?, base.divides(&gamma, phi2)?];
    let divides = Side::from_flags(verification).ok_or_else(|| {
        Error::Inconclusive(format!("{gamma} does not separate {phi1} and {phi2}: {verification:?}"))
    })?;
    Ok(CruxReport {
        gamma,
        case,
        branch,
        divides,
        verification,
        adrian,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(slots: &[i64]) -> PfisterForm {
        PfisterForm::new(slots.iter().map(|&v| SquareClass::new(v).unwrap()).collect())
    }

    fn pft(slots: &[&str]) -> PfisterForm<Monomial> {
        PfisterForm::new(slots.iter().map(|s| s.parse().unwrap()).collect())
    }

    #[test]
    fn rational_case_one() {
        let r = crux_witness(&pf(&[-1, 3]), &pf(&[-1, -1]), OddPrime::new(3).unwrap()).unwrap();
        assert_eq!(r.gamma, pf(&[-2]));
        assert_eq!(r.branch, CruxBranch::Adrian);
        assert_eq!(r.divides, Side::Second);
        let w = r.adrian.unwrap();
        assert_eq!((w.r.to_integer(), w.s.to_integer()), (1.into(), 2.into()));
    }

    #[test]
    fn t_adic_fixtures() {
        let r = crux_witness_qt(&pft(&["-1", "-1", "t"]), &pft(&["-1", "-1", "-1"])).unwrap();
        assert_eq!(r.gamma, pft(&["-1", "t"]));
        assert_eq!((r.case, r.branch, r.divides), (CruxCase::OneRamified, CruxBranch::LocallyAnisotropic, Side::First));

        let r = crux_witness_qt(&pft(&["-1", "-1", "t"]), &pft(&["-1", "-7", "t"])).unwrap();
        assert_eq!(r.gamma, pft(&["-1", "-1"]));
        assert_eq!((r.case, r.divides), (CruxCase::DifferentRamification, Side::First));
    }

    #[test]
    fn rejects_bad_inputs() {
        let p3 = OddPrime::new(3).unwrap();
        // both unramified at 3
        assert!(matches!(crux_witness(&pf(&[-1, -1]), &pf(&[-1, -5]), p3), Err(Error::Domain(_))));
        // isotropic
        assert!(matches!(crux_witness(&pf(&[1, 3]), &pf(&[-1, -1]), p3), Err(Error::Domain(_))));
        assert!(matches!(crux_witness(&pf(&[-1]), &pf(&[-1]), p3), Err(Error::Domain(_))));
    }
}
