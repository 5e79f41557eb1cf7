use serde::Serialize;

use crate::arith::SquareClass;
use crate::brauer::{embeds, ram_set, QuaternionAlgebra};
use crate::error::{Error, Result};
use crate::places::{find_square_class_within, LocalSquareConstraint, Place, DEFAULT_SEARCH_BOUND};
use crate::quadform::{invariants, is_isotropic, pfister_divides_within, PfisterForm};

use super::crux::crux_witness_within;
use super::{CaseTag, Side};

/// A witness contained in exactly one of two inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinguishReport<W> {
    pub witness: W,
    pub embeds_in: Side,
    pub case: CaseTag,
    pub place: Place,
    /// Containment in `[first, second]`.
    pub verification: [bool; 2],
}

/// A quadratic field `Q(√c)` inside exactly one of two quaternion division
/// algebras, or `None` when they are isomorphic.
pub fn distinguish_quaternions(
    d1: &QuaternionAlgebra,
    d2: &QuaternionAlgebra,
) -> Result<Option<DistinguishReport<SquareClass>>> {
    distinguish_quaternions_within(d1, d2, DEFAULT_SEARCH_BOUND)
}

pub fn distinguish_quaternions_within(
    d1: &QuaternionAlgebra,
    d2: &QuaternionAlgebra,
    bound: usize,
) -> Result<Option<DistinguishReport<SquareClass>>> {
    let (r1, r2) = (ram_set(d1), ram_set(d2));
    for (d, r) in [(d1, &r1), (d2, &r2)] {
        if r.is_empty() {
            return Err(Error::domain(format!(
                "{d} is split; every quadratic field embeds in it"
            )));
        }
    }
    if r1 == r2 {
        return Ok(None);
    }
    let diff = r1.symmetric_difference(&r2);
    assert!(
        diff.iter().any(|&v| v != Place::Dyadic),
        "ramification sets of even size cannot differ only at 2"
    );
    let v0 = if diff.contains(&Place::Real) {
        Place::Real
    } else {
        *diff.iter().find(|v| matches!(v, Place::OddPrime(_))).expect("checked above")
    };
    let mut constraints = vec![LocalSquareConstraint::square(v0)];
    constraints.extend(
        r1.union(&r2)
            .into_iter()
            .filter(|&v| v != v0)
            .map(LocalSquareConstraint::nonsquare),
    );
    let c = find_square_class_within(&constraints, bound)?;
    let verification = [embeds(c, d1)?, embeds(c, d2)?];
    let embeds_in = Side::from_flags(verification).expect("constructed witness separates the algebras");
    debug_assert_eq!(embeds_in == Side::First, !r1.contains(v0));
    Ok(Some(DistinguishReport {
        witness: c,
        embeds_in,
        case: CaseTag::of(v0),
        place: v0,
        verification,
    }))
}

fn is_hyperbolic_at_real(phi: &PfisterForm) -> bool {
    phi.slots().iter().any(|c| c.is_positive())
}

/// A `(d−1)`-Pfister form dividing exactly one of two anisotropic
/// `d`-Pfister forms over `Q`, or `None` when they are isometric.
pub fn distinguish_pfister(
    phi1: &PfisterForm,
    phi2: &PfisterForm,
) -> Result<Option<DistinguishReport<PfisterForm>>> {
    distinguish_pfister_within(phi1, phi2, DEFAULT_SEARCH_BOUND)
}

pub fn distinguish_pfister_within(
    phi1: &PfisterForm,
    phi2: &PfisterForm,
    bound: usize,
) -> Result<Option<DistinguishReport<PfisterForm>>> {
    let d = phi1.degree();
    if d < 2 || phi2.degree() != d {
        return Err(Error::domain(format!(
            "need two d-Pfister forms with d ≥ 2, got degrees {} and {}",
            d,
            phi2.degree()
        )));
    }
    for phi in [phi1, phi2] {
        if is_isotropic(&phi.realize()?)? {
            return Err(Error::domain(format!("{phi} is isotropic over Q")));
        }
    }
    let (i1, i2) = (invariants(&phi1.realize()?)?, invariants(&phi2.realize()?)?);
    if i1 == i2 {
        return Ok(None);
    }

    let hyperbolic = [is_hyperbolic_at_real(phi1), is_hyperbolic_at_real(phi2)];
    let (gamma, place) = if hyperbolic[0] != hyperbolic[1] {
        let phi = if hyperbolic[0] { phi1 } else { phi2 };
        let k = phi.slots().iter().position(|c| c.is_positive()).expect("hyperbolic at the real place");
        // keep the positive slot so that γ stays hyperbolic over R
        let mut slots = vec![phi.slots()[k]];
        slots.extend(phi.slots().iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &c)| c));
        slots.pop();
        (PfisterForm::new(slots), Place::Real)
    } else {
        let p = i1
            .hasse
            .keys()
            .chain(i2.hasse.keys())
            .filter_map(|v| match v {
                Place::OddPrime(p) if i1.hasse_at(*v) != i2.hasse_at(*v) => Some(*p),
                _ => None,
            })
            .min()
            .ok_or_else(|| Error::domain(format!("{phi1} and {phi2} differ only at the dyadic place")))?;
        (crux_witness_within(phi1, phi2, p, bound)?.gamma, Place::OddPrime(p))
    };

    let verification = [
        pfister_divides_within(&gamma, phi1, bound)?.divides,
        pfister_divides_within(&gamma, phi2, bound)?.divides,
    ];
    let embeds_in = Side::from_flags(verification)
        .ok_or_else(|| Error::Inconclusive(format!("{gamma} does not separate {phi1} and {phi2}")))?;
    Ok(Some(DistinguishReport {
        witness: gamma,
        embeds_in,
        case: CaseTag::of(place),
        place,
        verification,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(a: i64, b: i64) -> QuaternionAlgebra {
        QuaternionAlgebra::from_ints(a, b).unwrap()
    }

    fn pf(slots: &[i64]) -> PfisterForm {
        PfisterForm::new(slots.iter().map(|&v| SquareClass::new(v).unwrap()).collect())
    }

    #[test]
    fn quaternion_examples() {
        let r = distinguish_quaternions(&alg(-1, -1), &alg(-1, -3)).unwrap().unwrap();
        assert_eq!(r.witness.value(), -2);
        assert_eq!((r.embeds_in, r.case), (Side::First, CaseTag::OddPlace));
        assert_eq!(r.place, Place::odd(3).unwrap());

        // Real lies in the difference, so c must be positive: 2 embeds in (2, 5)
        let r = distinguish_quaternions(&alg(-1, -1), &alg(2, 5)).unwrap().unwrap();
        assert_eq!(r.witness.value(), 2);
        assert_eq!((r.embeds_in, r.case), (Side::Second, CaseTag::Real));

        assert!(distinguish_quaternions(&alg(-1, -1), &alg(-1, -1)).unwrap().is_none());
        assert!(matches!(distinguish_quaternions(&alg(1, 5), &alg(-1, -1)), Err(Error::Domain(_))));
    }

    #[test]
    fn pfister_examples() {
        let r = distinguish_pfister(&pf(&[-1, -1]), &pf(&[-1, -3])).unwrap().unwrap();
        assert_eq!(r.witness, pf(&[-2]));
        assert_eq!(r.embeds_in, Side::First);

        let r = distinguish_pfister(&pf(&[-1, -1]), &pf(&[2, 5])).unwrap().unwrap();
        assert_eq!(r.witness, pf(&[2]));
        assert_eq!((r.embeds_in, r.case), (Side::Second, CaseTag::Real));

        assert!(distinguish_pfister(&pf(&[-1, -1]), &pf(&[-1, -1])).unwrap().is_none());
        assert!(distinguish_pfister(&pf(&[-1, -1, -1]), &pf(&[-1, -1, -7])).unwrap().is_none());
        assert!(matches!(distinguish_pfister(&pf(&[1, 3]), &pf(&[-1, -1])), Err(Error::Domain(_))));
        assert!(matches!(distinguish_pfister(&pf(&[-1]), &pf(&[-3])), Err(Error::Domain(_))));
    }
}
