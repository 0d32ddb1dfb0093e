use alloc::vec::Vec;

use super::{FormError, TrilinearFormZd};
use crate::zmod::{enumerate_invertible, is_invertible_mod, ZdMatrix, DEFAULT_BUDGET};

/// An invertible `C` over `Z_d` with `t2(Cx, Cy, Cz) = t1(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormIsoWitness {
    matrix: ZdMatrix,
}

impl FormIsoWitness {
    pub fn new(matrix: ZdMatrix) -> Self {
        Self { matrix }
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        Self { matrix: ZdMatrix::identity(n, modulus) }
    }

    pub fn matrix(&self) -> &ZdMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ZdMatrix {
        self.matrix
    }

    /// Direct check over every basis triple, plus invertibility of `C`.
    pub fn verify(&self, t1: &TrilinearFormZd, t2: &TrilinearFormZd) -> bool {
        let n = t1.rank();
        if t2.rank() != n
            || t1.modulus() != t2.modulus()
            || self.matrix.rows() != n
            || self.matrix.cols() != n
            || self.matrix.modulus() != t1.modulus()
        {
            return false;
        }
        if t1.modulus() > 1 && !is_invertible_mod(&self.matrix).unwrap_or(false) {
            return false;
        }
        intertwines(t1, t2, &columns(&self.matrix), TripleSet::All)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest `|GL(n, Z_d)|` an exhaustive search may visit.
    pub budget: u128,
    /// Zero-form shortcuts and the identity and permutation candidates tried
    /// before exhaustive enumeration.
    pub fast_paths: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, fast_paths: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inequivalence {
    RankMismatch { a: usize, b: usize },
    ZeroVersusNonzero,
    ExhaustiveSearch { examined: u128 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormComparison {
    Equivalent(FormIsoWitness),
    Inequivalent(Inequivalence),
}

impl FormComparison {
    pub fn witness(&self) -> Option<&FormIsoWitness> {
        match self {
            Self::Equivalent(w) => Some(w),
            Self::Inequivalent(_) => None,
        }
    }

    pub fn is_equivalent(&self) -> bool {
        matches!(self, Self::Equivalent(_))
    }
}

pub(crate) fn columns(m: &ZdMatrix) -> Vec<Vec<u64>> {
    (0..m.cols()).map(|j| (0..m.rows()).map(|i| m.get(i, j)).collect()).collect()
}

#[derive(Clone, Copy)]
enum TripleSet {
    /// `i <= j <= k`; enough when both forms satisfy the alternating law.
    Sorted,
    All,
}

fn intertwines(t1: &TrilinearFormZd, t2: &TrilinearFormZd, cols: &[Vec<u64>], set: TripleSet) -> bool {
    let n = t1.rank();
    for i in 0..n {
        let j0 = if matches!(set, TripleSet::Sorted) { i } else { 0 };
        for j in j0..n {
            let k0 = if matches!(set, TripleSet::Sorted) { j } else { 0 };
            for k in k0..n {
                if t2.pullback_entry(cols, i, j, k) != t1.get(i, j, k) {
                    return false;
                }
            }
        }
    }
    true
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("successor exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

fn permutation_matrix(perm: &[usize], modulus: u64) -> ZdMatrix {
    let n = perm.len();
    let mut entries = alloc::vec![0i64; n * n];
    for (col, &row) in perm.iter().enumerate() {
        entries[row * n + col] = 1;
    }
    ZdMatrix::new(n, n, modulus, entries).expect("square")
}

/// Decides whether `t1` and `t2` differ by a change of basis in `GL(n, Z_d)`.
///
/// Candidates are tried in a fixed order (identity, permutation matrices,
/// then every invertible matrix in lexicographic order), and the first
/// witness found is returned. Reversing orientation needs no separate
/// search: if `t2∘C = -t1` then `t2∘(-C) = t1`.
pub fn forms_equivalent(
    t1: &TrilinearFormZd,
    t2: &TrilinearFormZd,
    options: SearchOptions,
) -> Result<FormComparison, FormError> {
    if t1.modulus() != t2.modulus() {
        return Err(FormError::ModulusMismatch(t1.modulus(), t2.modulus()));
    }
    let (n, d) = (t1.rank(), t1.modulus());
    if t2.rank() != n {
        return Ok(FormComparison::Inequivalent(Inequivalence::RankMismatch { a: n, b: t2.rank() }));
    }
    if d == 1 {
        // every form over the zero ring is zero
        return Ok(FormComparison::Equivalent(FormIsoWitness::identity(n, 1)));
    }
    if options.fast_paths {
        match (t1.is_zero(), t2.is_zero()) {
            (true, true) => return Ok(FormComparison::Equivalent(FormIsoWitness::identity(n, d))),
            (true, false) | (false, true) => {
                return Ok(FormComparison::Inequivalent(Inequivalence::ZeroVersusNonzero))
            }
            (false, false) => {}
        }
        for perm in permutations(n) {
            let m = permutation_matrix(&perm, d);
            if intertwines(t1, t2, &columns(&m), TripleSet::Sorted) {
                return Ok(FormComparison::Equivalent(FormIsoWitness::new(m)));
            }
        }
    }
    let mut examined: u128 = 0;
    for m in enumerate_invertible(n, d, options.budget)? {
        examined += 1;
        if intertwines(t1, t2, &columns(&m), TripleSet::Sorted) {
            return Ok(FormComparison::Equivalent(FormIsoWitness::new(m)));
        }
    }
    Ok(FormComparison::Inequivalent(Inequivalence::ExhaustiveSearch { examined }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmod::gl_order;

    fn t3(d: u64) -> TrilinearFormZd {
        TrilinearFormZd::from_entries(d, 3, &[([0, 1, 2], 1)]).unwrap()
    }

    #[test]
    fn nonzero_versus_zero() {
        let zero = TrilinearFormZd::zero(3, 3).unwrap();
        let r = forms_equivalent(&t3(3), &zero, SearchOptions::default()).unwrap();
        assert_eq!(r, FormComparison::Inequivalent(Inequivalence::ZeroVersusNonzero));
    }

    #[test]
    fn exhaustive_path_agrees_with_fast_path() {
        let zero = TrilinearFormZd::zero(3, 3).unwrap();
        let opts = SearchOptions { fast_paths: false, ..SearchOptions::default() };
        let r = forms_equivalent(&t3(3), &zero, opts).unwrap();
        assert_eq!(r, FormComparison::Inequivalent(Inequivalence::ExhaustiveSearch { examined: gl_order(3, 3) }));
    }

    #[test]
    fn self_equivalence_is_identity() {
        let t = t3(5);
        let r = forms_equivalent(&t, &t, SearchOptions::default()).unwrap();
        let w = r.witness().unwrap();
        assert!(w.matrix().is_identity());
        assert!(w.verify(&t, &t));
    }

    #[test]
    fn swapped_basis_gives_permutation_witness() {
        // t1 = t3 with basis vectors 1 and 2 exchanged, which negates the entry
        let t1 = TrilinearFormZd::from_entries(3, 3, &[([1, 0, 2], 1)]).unwrap();
        assert_eq!(t1.get(0, 1, 2), 2);
        let t2 = t3(3);
        let swap = permutation_matrix(&[1, 0, 2], 3);
        assert!(FormIsoWitness::new(swap).verify(&t1, &t2));
        let r = forms_equivalent(&t1, &t2, SearchOptions::default()).unwrap();
        let w = r.witness().unwrap();
        let m = w.matrix();
        assert!(w.verify(&t1, &t2));
        let is_permutation = (0..3).all(|i| (0..3).filter(|&j| m.get(i, j) == 1).count() == 1)
            && m.entries().iter().all(|&v| v <= 1);
        assert!(is_permutation, "{m:?}");
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let a = TrilinearFormZd::zero(3, 2).unwrap();
        let b = TrilinearFormZd::zero(3, 3).unwrap();
        assert_eq!(
            forms_equivalent(&a, &b, SearchOptions::default()).unwrap(),
            FormComparison::Inequivalent(Inequivalence::RankMismatch { a: 2, b: 3 })
        );
    }

    #[test]
    fn budget_error_propagates() {
        let opts = SearchOptions { budget: 10, fast_paths: false };
        assert!(matches!(forms_equivalent(&t3(3), &t3(3), opts), Err(FormError::Search(_))));
    }

    #[test]
    fn lexicographic_permutations() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], [0, 2, 1]);
        assert_eq!(permutations(0), [Vec::<usize>::new()]);
    }

    #[test]
    fn verify_rejects_wrong_witness() {
        let t = t3(3);
        let bad = FormIsoWitness::new(ZdMatrix::from_rows(&[[2, 0, 0], [0, 1, 0], [0, 0, 1]], 3).unwrap());
        assert!(!bad.verify(&t, &t));
        let singular = FormIsoWitness::new(ZdMatrix::zeros(3, 3, 3));
        let zero = TrilinearFormZd::zero(3, 3).unwrap();
        assert!(!singular.verify(&zero, &zero));
    }
}
