use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::equivalence::columns;
use super::{forms_equivalent, FormComparison, FormError, Inequivalence, SearchOptions, TrilinearFormZd};
use crate::verdict::{CongruenceVerdict, Evidence};
use crate::zmod::arith::reduce;
use crate::zmod::ZdMatrix;

/// Compares the cup-product forms of two manifolds at modulus `d`.
///
/// A weak `d`-congruence carries the form of one manifold onto the other
/// for odd `d`, and does so after reduction modulo `d/2` for even `d`. A
/// verdict of [`Distinguished`](crate::VerdictStatus::Distinguished) is
/// returned only when no such identification exists.
pub fn obstruct_weak_congruence(
    a: &TrilinearFormZd,
    b: &TrilinearFormZd,
    d: u64,
    options: SearchOptions,
) -> Result<CongruenceVerdict, FormError> {
    for m in [a.modulus(), b.modulus()] {
        if m != d {
            return Err(FormError::ModulusMismatch(m, d));
        }
    }
    if a.rank() != b.rank() {
        return Ok(CongruenceVerdict::distinguished(
            format!("H^1(-; Z_{d}) ranks differ ({} vs {})", a.rank(), b.rank()),
            Evidence::FormRanks { a: a.rank(), b: b.rank() },
        ));
    }
    let (fa, fb) = if d % 2 == 0 { (a.reduce_form()?, b.reduce_form()?) } else { (a.clone(), b.clone()) };
    let compared = fa.modulus();
    let evidence = |witness| Evidence::Forms {
        compared_modulus: compared,
        a_is_zero: fa.is_zero(),
        b_is_zero: fb.is_zero(),
        witness,
    };
    if compared == 1 {
        return Ok(CongruenceVerdict::inconclusive(
            format!("at d = {d} the forms reduce modulo d/2 = 1 and carry no information"),
            evidence(None),
        ));
    }
    let target = if d % 2 == 0 { format!("reduced forms over Z_{compared}") } else { format!("forms over Z_{d}") };
    match forms_equivalent(&fa, &fb, options)? {
        FormComparison::Equivalent(w) => Ok(CongruenceVerdict::inconclusive(
            format!("{target} are equivalent"),
            evidence(Some(w.into_matrix())),
        )),
        FormComparison::Inequivalent(why) => {
            let how = match why {
                Inequivalence::RankMismatch { .. } => "ranks differ",
                Inequivalence::ZeroVersusNonzero => "exactly one is zero",
                Inequivalence::ExhaustiveSearch { .. } => "no change of basis identifies them",
            };
            Ok(CongruenceVerdict::distinguished(format!("{target} are inequivalent: {how}"), evidence(None)))
        }
    }
}

/// Values of `b(Cx, Cy, Cz) - a(x, y, z)` over `Z_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    /// Every value the difference form takes, over all argument triples.
    pub values: BTreeSet<u64>,
    /// Basis triples `(i, j, k)` with a nonzero difference, in lexicographic order.
    pub nonzero_at: Vec<([usize; 3], u64)>,
}

/// How far a witness for the reduced forms is from identifying the forms
/// themselves.
///
/// `witness` may be given over `Z_d` or over `Z_{d/2}` (its residues are
/// then lifted as they are). It must carry `ρ(b)` onto `ρ(a)`, so every
/// difference is a multiple of `d/2` and the value set lies in `{0, d/2}`.
pub fn unreduced_discrepancy(
    a: &TrilinearFormZd,
    b: &TrilinearFormZd,
    witness: &ZdMatrix,
) -> Result<Discrepancy, FormError> {
    let d = a.modulus();
    if b.modulus() != d {
        return Err(FormError::ModulusMismatch(a.modulus(), b.modulus()));
    }
    if d % 2 != 0 {
        return Err(FormError::OddModulus(d));
    }
    let n = a.rank();
    if b.rank() != n || witness.rows() != n || witness.cols() != n {
        return Err(FormError::LengthMismatch { expected: n, found: witness.rows() });
    }
    if witness.modulus() != d && witness.modulus() != d / 2 {
        return Err(FormError::ModulusMismatch(witness.modulus(), d));
    }
    let lifted = ZdMatrix::new(n, n, d, witness.entries().iter().map(|&v| v as i64).collect())
        .expect("square witness");
    let cols = columns(&lifted);
    let half = d / 2;
    let mut values = BTreeSet::new();
    values.insert(0);
    let mut nonzero_at = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let diff = reduce(b.pullback_entry(&cols, i, j, k) as i64 - a.get(i, j, k) as i64, d);
                if diff % half != 0 {
                    return Err(FormError::WitnessDoesNotIntertwine { ijk: [i, j, k] });
                }
                if diff != 0 {
                    nonzero_at.push(([i, j, k], diff));
                }
                values.insert(diff);
            }
        }
    }
    Ok(Discrepancy { values, nonzero_at })
}
