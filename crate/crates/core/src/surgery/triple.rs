use alloc::vec;
use alloc::vec::Vec;

use super::SurgeryError;

/// The six permutations of three slots with their signs.
pub(crate) const PERMUTATIONS_3: [([usize; 3], i64); 6] = [
    ([0, 1, 2], 1),
    ([1, 2, 0], 1),
    ([2, 0, 1], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 1, 0], -1),
];

pub(crate) fn permute_triple(ijk: [usize; 3], perm: [usize; 3]) -> [usize; 3] {
    [ijk[perm[0]], ijk[perm[1]], ijk[perm[2]]]
}

/// Alternating integer tensor `μ(i, j, k)` of triple linking numbers.
///
/// Indices are 0-based. Entries with a repeated index are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleLinking {
    n: usize,
    values: Vec<i64>,
}

impl TripleLinking {
    pub fn zeros(n: usize) -> Self {
        Self { n, values: vec![0; n * n * n] }
    }

    /// Validates a full `n³` tensor in `i·n² + j·n + k` order.
    pub fn from_tensor(n: usize, values: Vec<i64>) -> Result<Self, SurgeryError> {
        if values.len() != n * n * n {
            return Err(SurgeryError::LengthMismatch { expected: n * n * n, found: values.len() });
        }
        let t = Self { n, values };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = t.get(i, j, k);
                    for (perm, sign) in PERMUTATIONS_3 {
                        let [a, b, c] = permute_triple([i, j, k], perm);
                        if t.get(a, b, c) != sign * v {
                            return Err(SurgeryError::TripleNotAlternating { ijk: [i, j, k] });
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    /// Completes a list of entries to its alternating closure.
    pub fn from_entries(n: usize, entries: &[([usize; 3], i64)]) -> Result<Self, SurgeryError> {
        let mut values: Vec<Option<i64>> = vec![None; n * n * n];
        for &(ijk, v) in entries {
            if ijk.iter().any(|&x| x >= n) {
                return Err(SurgeryError::IndexOutOfRange { index: *ijk.iter().max().unwrap(), len: n });
            }
            for (perm, sign) in PERMUTATIONS_3 {
                let [a, b, c] = permute_triple(ijk, perm);
                let slot = &mut values[(a * n + b) * n + c];
                match *slot {
                    Some(old) if old != sign * v => return Err(SurgeryError::TripleNotAlternating { ijk }),
                    _ => *slot = Some(sign * v),
                }
            }
        }
        Self::from_tensor(n, values.into_iter().map(|v| v.unwrap_or(0)).collect())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.values[(i * self.n + j) * self.n + k]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Entries with `i < j < k` that are nonzero.
    pub fn nonzero_entries(&self) -> Vec<([usize; 3], i64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    let v = self.get(i, j, k);
                    if v != 0 {
                        out.push(([i, j, k], v));
                    }
                }
            }
        }
        out
    }

    pub(crate) fn block_sum(&self, other: &TripleLinking) -> TripleLinking {
        let n = self.n + other.n;
        let mut out = Self::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    out.values[(i * n + j) * n + k] = self.get(i, j, k);
                }
            }
        }
        let o = self.n;
        for i in 0..other.n {
            for j in 0..other.n {
                for k in 0..other.n {
                    out.values[((o + i) * n + o + j) * n + o + k] = other.get(i, j, k);
                }
            }
        }
        out
    }

    /// Relabels so that new component `i` is old component `order[i]`.
    pub(crate) fn reorder(&self, order: &[usize]) -> TripleLinking {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.values[(i * n + j) * n + k] = self.get(order[i], order[j], order[k]);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_fills_all_permutations() {
        let t = TripleLinking::from_entries(3, &[([0, 1, 2], 1)]).unwrap();
        assert_eq!(t.get(1, 2, 0), 1);
        assert_eq!(t.get(1, 0, 2), -1);
        assert_eq!(t.get(0, 0, 2), 0);
        assert_eq!(t.nonzero_entries(), [([0, 1, 2], 1)]);
    }

    #[test]
    fn rejects_conflicts_and_repeated_indices() {
        assert!(TripleLinking::from_entries(3, &[([0, 1, 2], 1), ([1, 0, 2], 1)]).is_err());
        assert!(TripleLinking::from_entries(3, &[([0, 0, 2], 1)]).is_err());
        assert!(TripleLinking::from_entries(3, &[([0, 1, 3], 1)]).is_err());
        let mut raw = vec![0; 27];
        raw[5] = 1; // (0,1,2) only
        assert!(TripleLinking::from_tensor(3, raw).is_err());
    }
}
