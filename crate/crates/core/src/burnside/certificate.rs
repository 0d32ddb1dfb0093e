use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::group::{exponent_divides, FiniteGroupTable, Unitriangular, WitnessGroup};
use super::BurnsideError;
use crate::verdict::{CongruenceVerdict, Evidence};
use crate::zmod::arith::smallest_odd_prime_factor;
use crate::zmod::ZdModuleStructure;

/// Heisenberg groups up to this order are stored as explicit tables.
pub const TABLE_ORDER_LIMIT: u64 = super::group::FULL_CHECK_LIMIT as u64;

/// Fundamental groups the Burnside comparison understands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// Free group of the given rank.
    Free(usize),
    /// Finitely generated abelian group `⊕ Z_{f_i}`, with `0` standing for `Z`.
    Abelian(Vec<u64>),
}

/// The `d`-th Burnside group of an abelian group: its reduction mod `d`.
pub fn abelian_burnside(invariant_factors: &[u64], d: u64) -> Result<ZdModuleStructure, BurnsideError> {
    ZdModuleStructure::from_cyclic_orders(d, invariant_factors).map_err(|_| BurnsideError::InvalidModulus(d))
}

/// A finite group of exponent dividing `d` and images of `r` free
/// generators in it, at least two of which fail to commute.
///
/// Any map from a free group into a group of exponent dividing `d` factors
/// through the `d`-th Burnside group of the free group, so such a
/// certificate proves that Burnside group nonabelian.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurnsideCertificate {
    pub d: u64,
    pub r: usize,
    pub group: WitnessGroup,
    pub images: Vec<usize>,
}

/// Builds a certificate that `B(r, d)` is nonabelian.
///
/// Uses the Heisenberg group mod the smallest odd prime `p | d` (exponent
/// `p`), or the dihedral group of order 8 (exponent 4) when `d` is a power
/// of two. The first two generators map to non-commuting elements and the
/// rest to the identity.
pub fn make_certificate(d: u64, r: usize) -> Result<BurnsideCertificate, BurnsideError> {
    if d <= 2 {
        return Err(BurnsideError::ExponentTooSmall(d));
    }
    if r < 2 {
        return Err(BurnsideError::RankTooSmall(r));
    }
    let (group, x, y) = match smallest_odd_prime_factor(d) {
        Some(p) => {
            let h = Unitriangular::new(p)?;
            let (x, y) = (h.encode(1, 0, 0), h.encode(0, 1, 0));
            let group = if h.order() <= TABLE_ORDER_LIMIT {
                WitnessGroup::Table(FiniteGroupTable::heisenberg(p)?)
            } else {
                WitnessGroup::Unitriangular(h)
            };
            (group, x, y)
        }
        // d is a power of two and at least 4; rotation and reflection in D_8
        None => (WitnessGroup::Table(FiniteGroupTable::dihedral(4)?), 1, 4),
    };
    let mut images = vec![group.identity(); r];
    images[0] = x;
    images[1] = y;
    Ok(BurnsideCertificate { d, r, group, images })
}

/// Checks that the group has exponent dividing `d` and that some pair of
/// images fails to commute.
pub fn verify_certificate(c: &BurnsideCertificate) -> bool {
    let order = c.group.order() as usize;
    if c.d < 1 || c.r < 2 || c.images.len() != c.r || c.images.iter().any(|&x| x >= order) {
        return false;
    }
    if !exponent_divides(&c.group, c.d) {
        return false;
    }
    c.images
        .iter()
        .enumerate()
        .any(|(i, &a)| c.images[i + 1..].iter().any(|&b| !c.group.commute(a, b)))
}

/// Compares `d`-th Burnside groups of two fundamental groups.
///
/// Distinguishes exactly when one side is abelian (so its Burnside group is
/// abelian) and the other is free of rank at least 2 with `d > 2` (so its
/// Burnside group is not, by a verified certificate).
pub fn burnside_obstruction(a: &GroupKind, b: &GroupKind, d: u64) -> CongruenceVerdict {
    let pair = match (a, b) {
        (GroupKind::Abelian(f), GroupKind::Free(r)) | (GroupKind::Free(r), GroupKind::Abelian(f)) => Some((f, *r)),
        _ => None,
    };
    let Some((factors, r)) = pair else {
        return CongruenceVerdict::inconclusive(
            "Burnside comparison needs one abelian and one free fundamental group",
            Evidence::None,
        );
    };
    if r < 2 {
        return CongruenceVerdict::inconclusive(
            format!("free group of rank {r} is abelian; its Burnside group carries no extra information"),
            Evidence::None,
        );
    }
    let cert = match make_certificate(d, r) {
        Ok(c) if verify_certificate(&c) => c,
        Ok(_) => return CongruenceVerdict::inconclusive("certificate failed verification", Evidence::None),
        Err(e) => return CongruenceVerdict::inconclusive(format!("no certificate at d = {d}: {e}"), Evidence::None),
    };
    let abelian = match abelian_burnside(factors, d) {
        Ok(m) => m,
        Err(e) => return CongruenceVerdict::inconclusive(format!("{e}"), Evidence::None),
    };
    CongruenceVerdict::distinguished(
        format!(
            "d-th Burnside group is abelian ({abelian}) on one side but nonabelian for the free group of rank {r} \
             (witness group of order {}, exponent dividing {d})",
            cert.group.order()
        ),
        Evidence::Burnside { free_rank: r, certificate_order: cert.group.order() as u128 },
    )
}
