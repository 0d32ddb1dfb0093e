//! `d`-th Burnside groups: the quotient of a group by the normal closure of
//! all `d`-th powers, an invariant of weak `d`-congruence through `π_1`.

mod certificate;
mod group;

use core::fmt;

pub use certificate::{
    abelian_burnside, burnside_obstruction, make_certificate, verify_certificate, BurnsideCertificate, GroupKind,
    TABLE_ORDER_LIMIT,
};
pub use group::{exponent_divides, FiniteGroupTable, Unitriangular, WitnessGroup, FULL_CHECK_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BurnsideError {
    MalformedTable(&'static str),
    NotAGroup(&'static str),
    /// `B(r, 2)` is abelian, so no certificate exists for `d <= 2`.
    ExponentTooSmall(u64),
    RankTooSmall(usize),
    InvalidModulus(u64),
}

impl fmt::Display for BurnsideError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MalformedTable(why) => write!(f, "malformed group table: {why}"),
            Self::NotAGroup(axiom) => write!(f, "table is not a group: {axiom} fails"),
            Self::ExponentTooSmall(d) => {
                write!(f, "need d > 2 for a nonabelian Burnside certificate (got d = {d}); B(r, 2) is abelian")
            }
            Self::RankTooSmall(r) => write!(f, "need free rank r > 1 (got r = {r})"),
            Self::InvalidModulus(d) => write!(f, "invalid modulus {d}"),
        }
    }
}

impl core::error::Error for BurnsideError {}
