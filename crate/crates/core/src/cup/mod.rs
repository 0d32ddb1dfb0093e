//! The trilinear cup-product form `t_M(χ1, χ2, χ3) = ⟨χ1 ∪ χ2 ∪ χ3, [M]⟩`
//! on `H^1(M; Z_d)`, and the obstruction to weak `d`-congruence it yields.

mod equivalence;
mod form;
mod obstruction;

use core::fmt;

pub use equivalence::{forms_equivalent, FormComparison, FormIsoWitness, Inequivalence, SearchOptions};
pub use form::{form_from_split_presentation, lens_form, TrilinearFormZd};
pub use obstruction::{obstruct_weak_congruence, unreduced_discrepancy, Discrepancy};

use crate::zmod::ZmodError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormError {
    InvalidModulus(u64),
    ModulusMismatch(u64, u64),
    LengthMismatch { expected: usize, found: usize },
    IndexOutOfRange { index: usize, len: usize },
    NotAlternating { ijk: [usize; 3] },
    OddModulus(u64),
    NotSplit,
    NonzeroFraming(usize),
    MissingTriple,
    NotCoprime { q: i64, modulus: u64 },
    WitnessDoesNotIntertwine { ijk: [usize; 3] },
    Search(ZmodError),
}

impl From<ZmodError> for FormError {
    fn from(e: ZmodError) -> Self {
        Self::Search(e)
    }
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidModulus(d) => write!(f, "invalid modulus {d}"),
            Self::ModulusMismatch(a, b) => write!(f, "modulus mismatch: {a} vs {b}"),
            Self::LengthMismatch { expected, found } => write!(f, "expected length {expected}, found {found}"),
            Self::IndexOutOfRange { index, len } => write!(f, "index {index} out of range for rank {len}"),
            Self::NotAlternating { ijk } => write!(f, "tensor violates the alternating law at {ijk:?}"),
            Self::OddModulus(d) => write!(f, "reduction modulo d/2 needs even d, got {d}"),
            Self::NotSplit => f.write_str("presentation is not algebraically split"),
            Self::NonzeroFraming(i) => write!(f, "component {i} is not 0-framed"),
            Self::MissingTriple => f.write_str("presentation carries no triple linking data"),
            Self::NotCoprime { q, modulus } => write!(f, "{q} is not prime to {modulus}"),
            Self::WitnessDoesNotIntertwine { ijk } => {
                write!(f, "witness does not identify the reduced forms at {ijk:?}")
            }
            Self::Search(e) => write!(f, "equivalence search failed: {e}"),
        }
    }
}

impl core::error::Error for FormError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Self::Search(e) => Some(e),
            _ => None,
        }
    }
}
