use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{SurgeryCoefficient, SurgeryError, TripleLinking};
use crate::zmod::arith::{gcd_i64, reduce};
use crate::zmod::{cokernel_mod, IntMatrix, ZdModuleStructure};

/// Rational surgery on a framed link in `S^3`, recorded by its linking data.
///
/// `linking` is symmetric with zero diagonal. The optional `triple` tensor is
/// only meaningful (and only accepted) when every pairwise linking number
/// vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurgeryPresentation {
    coeffs: Vec<SurgeryCoefficient>,
    linking: Vec<i64>,
    triple: Option<TripleLinking>,
}

impl SurgeryPresentation {
    /// The empty presentation, i.e. `S^3`.
    pub fn empty() -> Self {
        Self { coeffs: Vec::new(), linking: Vec::new(), triple: Some(TripleLinking::zeros(0)) }
    }

    pub fn new(
        coeffs: Vec<SurgeryCoefficient>,
        linking: Vec<Vec<i64>>,
        triple: Option<TripleLinking>,
    ) -> Result<Self, SurgeryError> {
        let n = coeffs.len();
        if linking.len() != n {
            return Err(SurgeryError::LengthMismatch { expected: n, found: linking.len() });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &linking {
            if row.len() != n {
                return Err(SurgeryError::LengthMismatch { expected: n, found: row.len() });
            }
            flat.extend_from_slice(row);
        }
        for i in 0..n {
            if flat[i * n + i] != 0 {
                return Err(SurgeryError::LinkingDiagonalNonzero(i));
            }
            for j in 0..i {
                if flat[i * n + j] != flat[j * n + i] {
                    return Err(SurgeryError::LinkingNotSymmetric(i, j));
                }
            }
        }
        let p = Self { coeffs, linking: flat, triple: None };
        match triple {
            Some(t) => p.with_triple(t),
            None => Ok(p),
        }
    }

    /// Unlinked components with the given framings.
    pub fn unlink(coeffs: Vec<SurgeryCoefficient>) -> Self {
        let n = coeffs.len();
        Self { coeffs, linking: vec![0; n * n], triple: Some(TripleLinking::zeros(n)) }
    }

    pub fn with_triple(mut self, triple: TripleLinking) -> Result<Self, SurgeryError> {
        if triple.rank() != self.len() {
            return Err(SurgeryError::LengthMismatch { expected: self.len(), found: triple.rank() });
        }
        if !self.is_algebraically_split() {
            return Err(SurgeryError::TripleRequiresSplit);
        }
        self.triple = Some(triple);
        Ok(self)
    }

    pub fn without_triple(mut self) -> Self {
        self.triple = None;
        self
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[SurgeryCoefficient] {
        &self.coeffs
    }

    pub fn linking(&self, i: usize, j: usize) -> i64 {
        self.linking[i * self.len() + j]
    }

    pub fn linking_rows(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        (0..n).map(|i| self.linking[i * n..(i + 1) * n].to_vec()).collect()
    }

    pub fn triple(&self) -> Option<&TripleLinking> {
        self.triple.as_ref()
    }

    pub fn is_algebraically_split(&self) -> bool {
        self.linking.iter().all(|&v| v == 0)
    }

    /// `A_ii = p_i`, `A_ij = q_i · ℓ_ij`; `H_1(M; Z) = coker A`.
    pub fn presentation_matrix(&self) -> IntMatrix {
        let n = self.len();
        let mut a = IntMatrix::zeros(n, n);
        for i in 0..n {
            let c = self.coeffs[i];
            for j in 0..n {
                a[(i, j)] = if i == j {
                    BigInt::from(c.numerator())
                } else {
                    BigInt::from(c.denominator()) * BigInt::from(self.linking(i, j))
                };
            }
        }
        a
    }

    pub fn homology_zd(&self, d: u64) -> ZdModuleStructure {
        cokernel_mod(&self.presentation_matrix(), d)
    }

    /// Disjoint union of the two framed links.
    pub fn connected_sum(&self, other: &SurgeryPresentation) -> SurgeryPresentation {
        let (n, m) = (self.len(), other.len());
        let total = n + m;
        let mut linking = vec![0; total * total];
        for i in 0..n {
            for j in 0..n {
                linking[i * total + j] = self.linking(i, j);
            }
        }
        for i in 0..m {
            for j in 0..m {
                linking[(n + i) * total + n + j] = other.linking(i, j);
            }
        }
        let triple = match (&self.triple, &other.triple) {
            (Some(a), Some(b)) => Some(a.block_sum(b)),
            (t, _) if m == 0 => t.clone(),
            (_, t) if n == 0 => t.clone(),
            _ => None,
        };
        let mut coeffs = self.coeffs.clone();
        coeffs.extend_from_slice(&other.coeffs);
        SurgeryPresentation { coeffs, linking, triple }
    }

    /// Relabels components so that new component `i` is old component `order[i]`.
    pub fn reorder(&self, order: &[usize]) -> Result<SurgeryPresentation, SurgeryError> {
        let n = self.len();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(SurgeryError::LengthMismatch { expected: n, found: order.len() });
        }
        for &o in order {
            if o >= n || core::mem::replace(&mut seen[o], true) {
                return Err(SurgeryError::IndexOutOfRange { index: o, len: n });
            }
        }
        let coeffs = order.iter().map(|&o| self.coeffs[o]).collect();
        let mut linking = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                linking[i * n + j] = self.linking(order[i], order[j]);
            }
        }
        let triple = self.triple.as_ref().map(|t| t.reorder(order));
        Ok(SurgeryPresentation { coeffs, linking, triple })
    }

    /// Performs the surgery `m`, appending one component.
    pub fn apply_surgery(&self, m: &SurgeryMove) -> Result<SurgeryOutcome, SurgeryError> {
        m.validate()?;
        let n = self.len();
        if m.linkings.len() != n {
            return Err(SurgeryError::LengthMismatch { expected: n, found: m.linkings.len() });
        }
        let coeff = m.coefficient()?;
        let total = n + 1;
        let mut linking = vec![0; total * total];
        for i in 0..n {
            for j in 0..n {
                linking[i * total + j] = self.linking(i, j);
            }
            linking[i * total + n] = m.linkings[i];
            linking[n * total + i] = m.linkings[i];
        }
        let split_kept = m.linkings.iter().all(|&l| l == 0);
        let (triple, dropped) = match (&self.triple, &m.triples_with_pairs) {
            (Some(old), Some(pairs)) if split_kept => (Some(extend_triple(old, pairs)?), false),
            (Some(_), _) => (None, true),
            (None, _) => (None, false),
        };
        let mut coeffs = self.coeffs.clone();
        coeffs.push(coeff);
        Ok(SurgeryOutcome {
            presentation: SurgeryPresentation { coeffs, linking, triple },
            triple_dropped: dropped,
        })
    }
}

/// Adds a new last index whose triple numbers with each old pair `(i, j)`,
/// `i < j` in lexicographic order, are given by `pairs`.
fn extend_triple(old: &TripleLinking, pairs: &[i64]) -> Result<TripleLinking, SurgeryError> {
    let n = old.rank();
    let expected = n * n.saturating_sub(1) / 2;
    if pairs.len() != expected {
        return Err(SurgeryError::LengthMismatch { expected, found: pairs.len() });
    }
    let mut entries: Vec<([usize; 3], i64)> = old.nonzero_entries();
    let mut it = pairs.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v = *it.next().expect("length checked");
            if v != 0 {
                entries.push(([i, j, n], v));
            }
        }
    }
    TripleLinking::from_entries(n + 1, &entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// `q/(d·s)` surgery with `q` prime to `d·s`.
    WeakTypeD,
    /// Weak type-`d` with `q ≡ ±1 (mod d)`.
    TypeD,
}

/// A `q/(d·s)` surgery on a new curve, described by its linking numbers with
/// the existing components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurgeryMove {
    pub kind: MoveKind,
    pub d: u64,
    pub s: u64,
    pub q_num: i64,
    pub linkings: Vec<i64>,
    /// Triple linking numbers of the new curve with each pair of old
    /// components, in lexicographic pair order.
    pub triples_with_pairs: Option<Vec<i64>>,
}

impl SurgeryMove {
    pub fn weak(d: u64, s: u64, q_num: i64, linkings: Vec<i64>) -> Self {
        Self { kind: MoveKind::WeakTypeD, d, s, q_num, linkings, triples_with_pairs: None }
    }

    pub fn type_d(d: u64, s: u64, q_num: i64, linkings: Vec<i64>) -> Self {
        Self { kind: MoveKind::TypeD, d, s, q_num, linkings, triples_with_pairs: None }
    }

    pub fn with_triples(mut self, pairs: Vec<i64>) -> Self {
        self.triples_with_pairs = Some(pairs);
        self
    }

    pub fn denominator(&self) -> i64 {
        (self.d * self.s) as i64
    }

    pub fn validate(&self) -> Result<(), SurgeryError> {
        if self.d < 2 || self.s < 1 {
            return Err(SurgeryError::InvalidMove { d: self.d, s: self.s, q: self.q_num });
        }
        if gcd_i64(self.q_num, self.denominator()) != 1 {
            return Err(SurgeryError::NotCoprime { q: self.q_num, d: self.d, s: self.s });
        }
        if self.kind == MoveKind::TypeD {
            let r = reduce(self.q_num, self.d);
            if r != 1 && r != self.d - 1 {
                return Err(SurgeryError::NotTypeD { q: self.q_num, d: self.d });
            }
        }
        Ok(())
    }

    pub fn coefficient(&self) -> Result<SurgeryCoefficient, SurgeryError> {
        SurgeryCoefficient::new(self.q_num, self.denominator())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryOutcome {
    pub presentation: SurgeryPresentation,
    /// The input carried triple linking data that the move could not extend.
    pub triple_dropped: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmod::ZdModuleStructure;

    fn c(p: i64, q: i64) -> SurgeryCoefficient {
        SurgeryCoefficient::new(p, q).unwrap()
    }

    #[test]
    fn lens_presentation() {
        let (d, s) = (4i64, 3i64);
        let p = SurgeryPresentation::unlink(vec![c(d * s, 1)]);
        assert_eq!(p.presentation_matrix(), IntMatrix::from_i64_rows(&[[12]]));
        assert_eq!(p.homology_zd(4), ZdModuleStructure::free(4, 1));
    }

    #[test]
    fn hopf_presentation_from_surgery() {
        let (d, s, q) = (5u64, 2u64, 3i64);
        let s1xs2 = SurgeryPresentation::unlink(vec![SurgeryCoefficient::integer(0)]);
        let out = s1xs2.apply_surgery(&SurgeryMove::weak(d, s, q, vec![1])).unwrap();
        let a = out.presentation.presentation_matrix();
        assert_eq!(a, IntMatrix::from_i64_rows(&[[0, 1], [10, 3]]));
        assert_eq!(a.determinant().unwrap(), BigInt::from(-10));
        assert!(out.triple_dropped);
        assert_eq!(out.presentation.homology_zd(5), s1xs2.homology_zd(5));
    }

    #[test]
    fn surgery_on_s3_gives_lens_space() {
        let s3 = SurgeryPresentation::empty();
        let out = s3.apply_surgery(&SurgeryMove::weak(2, 1, 3, vec![])).unwrap();
        assert_eq!(out.presentation.coeffs(), &[c(3, 2)]);
        assert!(out.presentation.homology_zd(2).is_trivial());
        assert_eq!(out.presentation.homology_zd(2), s3.homology_zd(2));
    }

    #[test]
    fn move_validation() {
        let p = SurgeryPresentation::empty();
        assert!(matches!(
            p.apply_surgery(&SurgeryMove::weak(3, 2, 2, vec![])),
            Err(SurgeryError::NotCoprime { .. })
        ));
        assert!(matches!(
            p.apply_surgery(&SurgeryMove::type_d(5, 1, 2, vec![])),
            Err(SurgeryError::NotTypeD { .. })
        ));
        assert!(p.apply_surgery(&SurgeryMove::type_d(5, 1, 4, vec![])).is_ok());
        assert!(matches!(
            p.apply_surgery(&SurgeryMove::weak(3, 1, 1, vec![0])),
            Err(SurgeryError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn triple_is_extended_when_supplied() {
        let t3 = SurgeryPresentation::unlink(vec![SurgeryCoefficient::integer(0); 3])
            .with_triple(TripleLinking::from_entries(3, &[([0, 1, 2], 1)]).unwrap())
            .unwrap();
        let m = SurgeryMove::weak(3, 1, 1, vec![0, 0, 0]).with_triples(vec![0, 2, 0]);
        let out = t3.apply_surgery(&m).unwrap();
        assert!(!out.triple_dropped);
        let t = out.presentation.triple().unwrap();
        assert_eq!(t.get(0, 2, 3), 2);
        assert_eq!(t.get(3, 2, 0), -2);
        assert_eq!(t.get(0, 1, 2), 1);
        let linked = SurgeryMove::weak(3, 1, 1, vec![1, 0, 0]).with_triples(vec![0, 0, 0]);
        assert!(t3.apply_surgery(&linked).unwrap().triple_dropped);
    }

    #[test]
    fn connected_sum_blocks() {
        let l2 = SurgeryPresentation::unlink(vec![SurgeryCoefficient::integer(2)]);
        let l3 = SurgeryPresentation::unlink(vec![SurgeryCoefficient::integer(3)]);
        let sum = l2.connected_sum(&l3);
        assert_eq!(sum.presentation_matrix(), IntMatrix::diagonal(&[2, 3]));
        assert_eq!(sum.homology_zd(6), ZdModuleStructure::free(6, 1));
        assert_eq!(l2.connected_sum(&SurgeryPresentation::empty()), l2);
        assert_eq!(SurgeryPresentation::empty().connected_sum(&l2), l2);
    }

    #[test]
    fn constructor_checks_linking() {
        let cs = vec![SurgeryCoefficient::integer(0); 2];
        assert!(matches!(
            SurgeryPresentation::new(cs.clone(), vec![vec![0, 1], vec![2, 0]], None),
            Err(SurgeryError::LinkingNotSymmetric(1, 0))
        ));
        assert!(matches!(
            SurgeryPresentation::new(cs.clone(), vec![vec![1, 0], vec![0, 0]], None),
            Err(SurgeryError::LinkingDiagonalNonzero(0))
        ));
        assert!(matches!(
            SurgeryPresentation::new(cs, vec![vec![0, 1], vec![1, 0]], Some(TripleLinking::zeros(2))),
            Err(SurgeryError::TripleRequiresSplit)
        ));
    }

    #[test]
    fn reorder_permutes_everything() {
        let p = SurgeryPresentation::new(
            vec![c(1, 2), c(3, 1), c(-1, 1)],
            vec![vec![0, 2, 0], vec![2, 0, -1], vec![0, -1, 0]],
            None,
        )
        .unwrap();
        let r = p.reorder(&[2, 0, 1]).unwrap();
        assert_eq!(r.coeffs(), &[c(-1, 1), c(1, 2), c(3, 1)]);
        assert_eq!(r.linking(0, 2), -1);
        assert_eq!(r.homology_zd(6), p.homology_zd(6));
        assert!(p.reorder(&[0, 0, 1]).is_err());
    }
}
