//! Rational surgery presentations and weak type-`d` surgery.

mod catalog;
mod coefficient;
mod presentation;
mod triple;

use alloc::string::String;
use core::fmt;

pub use catalog::{catalog, CatalogEntry, CatalogName};
pub use coefficient::{is_type_d, SurgeryCoefficient};
pub use presentation::{MoveKind, SurgeryMove, SurgeryOutcome, SurgeryPresentation};
pub use triple::TripleLinking;
pub(crate) use triple::{permute_triple, PERMUTATIONS_3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryError {
    NonPositiveDenominator(i64),
    NotReduced { p: i64, q: i64 },
    LengthMismatch { expected: usize, found: usize },
    IndexOutOfRange { index: usize, len: usize },
    LinkingNotSymmetric(usize, usize),
    LinkingDiagonalNonzero(usize),
    TripleNotAlternating { ijk: [usize; 3] },
    TripleRequiresSplit,
    InvalidMove { d: u64, s: u64, q: i64 },
    NotCoprime { q: i64, d: u64, s: u64 },
    NotTypeD { q: i64, d: u64 },
    UnknownCatalogName(String),
}

impl fmt::Display for SurgeryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonPositiveDenominator(q) => write!(f, "surgery denominator {q} must be at least 1"),
            Self::NotReduced { p, q } => write!(f, "surgery coefficient {p}/{q} is not in lowest terms"),
            Self::LengthMismatch { expected, found } => write!(f, "expected length {expected}, found {found}"),
            Self::IndexOutOfRange { index, len } => write!(f, "component index {index} out of range for {len} components"),
            Self::LinkingNotSymmetric(i, j) => write!(f, "linking matrix not symmetric at ({i}, {j})"),
            Self::LinkingDiagonalNonzero(i) => write!(f, "linking matrix diagonal entry {i} is nonzero"),
            Self::TripleNotAlternating { ijk } => write!(f, "triple linking tensor not alternating at {ijk:?}"),
            Self::TripleRequiresSplit => f.write_str("triple linking data requires all pairwise linking numbers to vanish"),
            Self::InvalidMove { d, s, q } => write!(f, "invalid surgery move {q}/({d}·{s}): need d >= 2 and s >= 1"),
            Self::NotCoprime { q, d, s } => write!(f, "numerator {q} is not relatively prime to d = {d} and s = {s}"),
            Self::NotTypeD { q, d } => write!(f, "numerator {q} is not ±1 mod {d}, so the move is not type-{d}"),
            Self::UnknownCatalogName(n) => write!(f, "unknown catalog name `{n}`"),
        }
    }
}

impl core::error::Error for SurgeryError {}
