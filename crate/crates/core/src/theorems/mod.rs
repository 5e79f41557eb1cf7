//! Witness-producing versions of the distinguishing theorems.
//!
//! Every witness is checked before it is returned: quadratic fields through
//! [`embeds`](crate::brauer::embeds), Pfister divisors through
//! [`pfister_divides`](crate::quadform::pfister_divides) or the three-valued
//! `Q(t)` test.
//!
//! Over `Q`, an anisotropic `d`-Pfister form with `d ≥ 3` is isotropic at
//! every finite place, hence positive definite, and all of these are
//! isometric. So [`distinguish_pfister`] only has content for `d = 2`; the
//! `d = 3` instances live over `Q(t)` and go through [`crux_witness_qt`].

use serde::Serialize;

use crate::places::Place;

mod crux;
mod distinguish;
mod rost;
mod tractable;

pub use crux::{
    crux_witness, crux_witness_qt, crux_witness_qt_within, crux_witness_within, CruxBranch, CruxCase, CruxReport,
};
pub use distinguish::{
    distinguish_pfister, distinguish_pfister_within, distinguish_quaternions, distinguish_quaternions_within,
    DistinguishReport,
};
pub use rost::{rost_step, rost_step_within, AlbertCheck, Exclusions, RostStepReport};
pub use tractable::{tractable_search_local, tractable_verify, TractableBase, TractableConfig, TractableReport};

/// One of the two inputs of a distinguishing problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Side::First => 0,
            Side::Second => 1,
        }
    }

    fn from_flags(flags: [bool; 2]) -> Option<Side> {
        match flags {
            [true, false] => Some(Side::First),
            [false, true] => Some(Side::Second),
            _ => None,
        }
    }
}

/// Which kind of place separates the two inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    Real,
    OddPlace,
}

impl CaseTag {
    fn of(v: Place) -> CaseTag {
        if v == Place::Real {
            CaseTag::Real
        } else {
            CaseTag::OddPlace
        }
    }
}
