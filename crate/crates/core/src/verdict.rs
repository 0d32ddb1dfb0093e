//! Outcomes of comparing two manifolds under a preserved invariant.

use alloc::string::String;

use crate::zmod::{ZdMatrix, ZdModuleStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    /// A preserved invariant provably differs: the manifolds are not weakly
    /// `d`-congruent.
    Distinguished,
    /// Nothing was proved. This never asserts congruence.
    Inconclusive,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Distinguished => "distinguished",
            Self::Inconclusive => "inconclusive",
        }
    }
}

/// The data a verdict was decided on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    None,
    Homology { a: ZdModuleStructure, b: ZdModuleStructure },
    FormRanks { a: usize, b: usize },
    Forms {
        /// `d` for odd `d`, `d/2` after reduction for even `d`.
        compared_modulus: u64,
        a_is_zero: bool,
        b_is_zero: bool,
        witness: Option<ZdMatrix>,
    },
    Burnside {
        free_rank: usize,
        certificate_order: u128,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceVerdict {
    pub status: VerdictStatus,
    pub reason: String,
    pub evidence: Evidence,
}

impl CongruenceVerdict {
    pub fn distinguished(reason: impl Into<String>, evidence: Evidence) -> Self {
        Self { status: VerdictStatus::Distinguished, reason: reason.into(), evidence }
    }

    pub fn inconclusive(reason: impl Into<String>, evidence: Evidence) -> Self {
        Self { status: VerdictStatus::Inconclusive, reason: reason.into(), evidence }
    }

    pub fn is_distinguished(&self) -> bool {
        self.status == VerdictStatus::Distinguished
    }
}
