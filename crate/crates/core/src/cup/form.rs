use alloc::vec;
use alloc::vec::Vec;

use super::FormError;
use crate::surgery::{permute_triple, SurgeryPresentation, PERMUTATIONS_3};
use crate::zmod::arith::{gcd_i64, neg_mod, reduce};

/// A trilinear form on `Z_d^n` with values in `Z_d`, stored as its full
/// `n×n×n` tensor on a basis.
///
/// The tensor is alternating up to sign: permuting the arguments multiplies
/// the value by the sign of the permutation. Entries with a repeated index are
/// therefore 2-torsion, and zero when `d` is odd. `d = 1` is allowed as the
/// degenerate ring of the reduction map at `d = 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrilinearFormZd {
    modulus: u64,
    n: usize,
    values: Vec<u64>,
}

impl TrilinearFormZd {
    pub fn zero(modulus: u64, n: usize) -> Result<Self, FormError> {
        if modulus == 0 {
            return Err(FormError::InvalidModulus(modulus));
        }
        Ok(Self { modulus, n, values: vec![0; n * n * n] })
    }

    /// Validates a full tensor in `i·n² + j·n + k` order; entries are reduced mod `d`.
    pub fn from_tensor(modulus: u64, n: usize, values: Vec<i64>) -> Result<Self, FormError> {
        if modulus == 0 {
            return Err(FormError::InvalidModulus(modulus));
        }
        if values.len() != n * n * n {
            return Err(FormError::LengthMismatch { expected: n * n * n, found: values.len() });
        }
        let values = values.into_iter().map(|v| reduce(v, modulus)).collect();
        let form = Self { modulus, n, values };
        form.check_alternating()?;
        Ok(form)
    }

    /// Completes a list of (typically nonzero) entries to the alternating
    /// closure; omitted entries are zero.
    pub fn from_entries(modulus: u64, n: usize, entries: &[([usize; 3], i64)]) -> Result<Self, FormError> {
        if modulus == 0 {
            return Err(FormError::InvalidModulus(modulus));
        }
        let mut values: Vec<Option<u64>> = vec![None; n * n * n];
        for &(ijk, v) in entries {
            if let Some(&bad) = ijk.iter().find(|&&x| x >= n) {
                return Err(FormError::IndexOutOfRange { index: bad, len: n });
            }
            let v = reduce(v, modulus);
            for (perm, sign) in PERMUTATIONS_3 {
                let [a, b, c] = permute_triple(ijk, perm);
                let target = if sign == 1 { v } else { neg_mod(v, modulus) };
                let slot = &mut values[(a * n + b) * n + c];
                match *slot {
                    Some(old) if old != target => return Err(FormError::NotAlternating { ijk }),
                    _ => *slot = Some(target),
                }
            }
        }
        let form = Self { modulus, n, values: values.into_iter().map(|v| v.unwrap_or(0)).collect() };
        form.check_alternating()?;
        Ok(form)
    }

    fn check_alternating(&self) -> Result<(), FormError> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    for (perm, sign) in PERMUTATIONS_3 {
                        let [a, b, c] = permute_triple([i, j, k], perm);
                        let want = if sign == 1 { v } else { neg_mod(v, self.modulus) };
                        if self.get(a, b, c) != want {
                            return Err(FormError::NotAlternating { ijk: [i, j, k] });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.values[(i * self.n + j) * self.n + k]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Entries with `i <= j <= k` that are nonzero; by the alternating law
    /// they determine the form.
    pub fn nonzero_entries(&self) -> Vec<([usize; 3], u64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i..self.n {
                for k in j..self.n {
                    let v = self.get(i, j, k);
                    if v != 0 {
                        out.push(([i, j, k], v));
                    }
                }
            }
        }
        out
    }

    /// Trilinear extension of the basis tensor.
    pub fn evaluate(&self, x: &[i64], y: &[i64], z: &[i64]) -> Result<u64, FormError> {
        for v in [x, y, z] {
            if v.len() != self.n {
                return Err(FormError::LengthMismatch { expected: self.n, found: v.len() });
            }
        }
        let d = self.modulus;
        let (x, y, z): (Vec<u64>, Vec<u64>, Vec<u64>) = (
            x.iter().map(|&v| reduce(v, d)).collect(),
            y.iter().map(|&v| reduce(v, d)).collect(),
            z.iter().map(|&v| reduce(v, d)).collect(),
        );
        Ok(self.evaluate_residues(&x, &y, &z))
    }

    pub(crate) fn evaluate_residues(&self, x: &[u64], y: &[u64], z: &[u64]) -> u64 {
        let d = self.modulus as u128;
        let n = self.n;
        let mut acc: u128 = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                let xy = x[i] as u128 * y[j] as u128 % d;
                for k in 0..n {
                    let t = self.values[(i * n + j) * n + k];
                    if t == 0 || z[k] == 0 {
                        continue;
                    }
                    acc = (acc + xy * (t as u128 * z[k] as u128 % d)) % d;
                }
            }
        }
        acc as u64
    }

    /// Entrywise reduction modulo `d/2` for even `d`.
    pub fn reduce_form(&self) -> Result<TrilinearFormZd, FormError> {
        if self.modulus % 2 != 0 {
            return Err(FormError::OddModulus(self.modulus));
        }
        let half = self.modulus / 2;
        Ok(Self { modulus: half, n: self.n, values: self.values.iter().map(|&v| v % half).collect() })
    }

    /// `-t`, the form of the oppositely oriented manifold.
    pub fn negated(&self) -> TrilinearFormZd {
        let values = self.values.iter().map(|&v| neg_mod(v, self.modulus)).collect();
        Self { modulus: self.modulus, n: self.n, values }
    }

    /// Change of basis `(x, y, z) ↦ t(Cx, Cy, Cz)` for a matrix given by its
    /// columns over the same modulus.
    pub(crate) fn pullback_entry(&self, columns: &[Vec<u64>], i: usize, j: usize, k: usize) -> u64 {
        self.evaluate_residues(&columns[i], &columns[j], &columns[k])
    }
}

/// The form of `L(ds, q)` on its rank-one `Z_d` cohomology: the cube of a
/// generator is `d/2` for even `d` and `0` for odd `d`.
pub fn lens_form(d: u64, s: u64, q: i64) -> Result<TrilinearFormZd, FormError> {
    if d < 2 || s < 1 {
        return Err(FormError::InvalidModulus(d));
    }
    if gcd_i64(q, (d * s) as i64) != 1 {
        return Err(FormError::NotCoprime { q, modulus: d * s });
    }
    let cube = if d % 2 == 0 { d / 2 } else { 0 };
    TrilinearFormZd::from_tensor(d, 1, vec![cube as i64])
}

/// The form of a 0-framed, algebraically split surgery presentation: on the
/// basis dual to the meridians it is the triple linking tensor mod `d`.
pub fn form_from_split_presentation(p: &SurgeryPresentation, d: u64) -> Result<TrilinearFormZd, FormError> {
    if d < 2 {
        return Err(FormError::InvalidModulus(d));
    }
    if !p.is_algebraically_split() {
        return Err(FormError::NotSplit);
    }
    if let Some(i) = p.coeffs().iter().position(|c| !(c.numerator() == 0 && c.is_integral())) {
        return Err(FormError::NonzeroFraming(i));
    }
    let triple = p.triple().ok_or(FormError::MissingTriple)?;
    TrilinearFormZd::from_tensor(d, p.len(), triple.values().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surgery::{catalog, CatalogName, SurgeryCoefficient};

    fn t3(d: u64) -> TrilinearFormZd {
        let p = catalog(&CatalogName::T3).unwrap();
        form_from_split_presentation(p.as_surgery().unwrap(), d).unwrap()
    }

    #[test]
    fn torus_form_values() {
        let t = t3(3);
        assert_eq!(t.evaluate(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]).unwrap(), 1);
        assert_eq!(t.evaluate(&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]).unwrap(), 2);
        assert_eq!(t.evaluate(&[1, 0, 0], &[1, 0, 0], &[0, 0, 1]).unwrap(), 0);
        assert!(t.evaluate(&[1, 0], &[0, 1, 0], &[0, 0, 1]).is_err());
        assert_eq!(t3(5).nonzero_entries(), [([0, 1, 2], 1)]);
    }

    #[test]
    fn unlinks_give_zero_forms() {
        let p = catalog(&CatalogName::SumS1xS2(3)).unwrap();
        assert!(form_from_split_presentation(p.as_surgery().unwrap(), 5).unwrap().is_zero());
        let two = SurgeryPresentation::unlink(vec![SurgeryCoefficient::integer(0); 2]);
        for d in 2..8 {
            assert!(form_from_split_presentation(&two, d).unwrap().is_zero());
        }
    }

    #[test]
    fn split_form_preconditions() {
        let framed = SurgeryPresentation::unlink(vec![SurgeryCoefficient::integer(1)]);
        assert_eq!(form_from_split_presentation(&framed, 3), Err(FormError::NonzeroFraming(0)));
        let bare = SurgeryPresentation::unlink(vec![SurgeryCoefficient::integer(0)]).without_triple();
        assert_eq!(form_from_split_presentation(&bare, 3), Err(FormError::MissingTriple));
        let hopf = SurgeryPresentation::new(
            vec![SurgeryCoefficient::integer(0); 2],
            vec![vec![0, 1], vec![1, 0]],
            None,
        )
        .unwrap();
        assert_eq!(form_from_split_presentation(&hopf, 3), Err(FormError::NotSplit));
    }

    #[test]
    fn lens_forms() {
        assert_eq!(lens_form(4, 1, 1).unwrap().get(0, 0, 0), 2);
        assert!(lens_form(5, 2, 3).unwrap().is_zero());
        assert_eq!(lens_form(2, 1, 1).unwrap().get(0, 0, 0), 1);
        assert_eq!(lens_form(4, 3, 3), Err(FormError::NotCoprime { q: 3, modulus: 12 }));
    }

    #[test]
    fn reduction() {
        let r = lens_form(4, 1, 1).unwrap().reduce_form().unwrap();
        assert_eq!((r.modulus(), r.is_zero()), (2, true));
        let r = t3(6).reduce_form().unwrap();
        assert_eq!((r.modulus(), r.get(0, 1, 2)), (3, 1));
        let r = t3(2).reduce_form().unwrap();
        assert_eq!((r.modulus(), r.rank(), r.is_zero()), (1, 3, true));
        assert_eq!(t3(3).reduce_form(), Err(FormError::OddModulus(3)));
    }

    #[test]
    fn constructor_enforces_alternation() {
        // repeated index with odd modulus must vanish
        assert!(TrilinearFormZd::from_entries(3, 2, &[([0, 0, 1], 1)]).is_err());
        // 2-torsion repeated-index entries are fine for even modulus
        assert!(TrilinearFormZd::from_entries(4, 2, &[([0, 0, 1], 2)]).is_ok());
        assert!(TrilinearFormZd::from_entries(4, 2, &[([0, 0, 1], 1)]).is_err());
        let mut raw = vec![0i64; 27];
        raw[5] = 1;
        assert!(TrilinearFormZd::from_tensor(5, 3, raw).is_err());
    }
}
