use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::arith::{gcd_u64, inv_mod, mul_mod, reduce};
use super::ZmodError;

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, ZmodError> {
        if entries.len() != rows * cols {
            return Err(ZmodError::ShapeMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Self { rows: rows.len(), cols, entries }
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = BigInt::from(v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, ZmodError> {
        if self.cols != rhs.rows {
            return Err(ZmodError::ShapeMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(source, j)] * factor;
            self[(target, j)] += v;
        }
    }

    /// `col[target] += factor * col[source]`
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, source)] * factor;
            self[(i, target)] += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -core::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, ZmodError> {
        if !self.is_square() {
            return Err(ZmodError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    /// Reduction of every entry into `Z_d`.
    pub fn to_zd(&self, modulus: u64) -> ZdMatrix {
        let m = BigInt::from(modulus);
        let entries = self
            .entries
            .iter()
            .map(|v| {
                let r = v % &m;
                let r = if r.is_negative() { r + &m } else { r };
                u64::try_from(r).expect("residue below modulus")
            })
            .collect();
        ZdMatrix { rows: self.rows, cols: self.cols, modulus, entries }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Dense matrix over `Z_d` with canonical residues in `0..d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZdMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<u64>,
}

impl ZdMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Self {
        Self { rows, cols, modulus, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m.entries[i * n + i] = 1 % modulus;
        }
        m
    }

    /// Entries are reduced into `0..modulus`.
    pub fn new(rows: usize, cols: usize, modulus: u64, entries: Vec<i64>) -> Result<Self, ZmodError> {
        if modulus == 0 {
            return Err(ZmodError::InvalidModulus(modulus));
        }
        if entries.len() != rows * cols {
            return Err(ZmodError::ShapeMismatch { expected: rows * cols, found: entries.len() });
        }
        let entries = entries.into_iter().map(|v| reduce(v, modulus)).collect();
        Ok(Self { rows, cols, modulus, entries })
    }

    pub(crate) fn from_residues(rows: usize, cols: usize, modulus: u64, entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        debug_assert!(entries.iter().all(|&v| v < modulus));
        Self { rows, cols, modulus, entries }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R], modulus: u64) -> Result<Self, ZmodError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(ZmodError::ShapeMismatch { expected: cols, found: r.len() });
            }
            entries.extend_from_slice(r);
        }
        Self::new(rows.len(), cols, modulus, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j) % self.modulus))
    }

    pub fn mul(&self, rhs: &ZdMatrix) -> Result<ZdMatrix, ZmodError> {
        if self.cols != rhs.rows {
            return Err(ZmodError::ShapeMismatch { expected: self.cols, found: rhs.rows });
        }
        if self.modulus != rhs.modulus {
            return Err(ZmodError::ModulusMismatch(self.modulus, rhs.modulus));
        }
        let d = self.modulus as u128;
        let mut out = Self::zeros(self.rows, rhs.cols, self.modulus);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = 0u128;
                for k in 0..self.cols {
                    acc = (acc + self.get(i, k) as u128 * rhs.get(k, j) as u128) % d;
                }
                out.entries[i * rhs.cols + j] = acc as u64;
            }
        }
        Ok(out)
    }

    /// Reinterprets the residues modulo a divisor of the current modulus.
    pub fn reduce_to(&self, modulus: u64) -> ZdMatrix {
        let entries = self.entries.iter().map(|&v| v % modulus).collect();
        ZdMatrix { rows: self.rows, cols: self.cols, modulus, entries }
    }

    /// Inverse matrix, if the determinant is a unit.
    pub fn inverse(&self) -> Result<Option<ZdMatrix>, ZmodError> {
        let det = det_mod(self)?;
        let Some(det_inv) = inv_mod(det, self.modulus) else {
            return Ok(None);
        };
        let n = self.rows;
        let d = self.modulus;
        let mut out = Self::zeros(n, n, d);
        for i in 0..n {
            for j in 0..n {
                // adj[j][i] = (-1)^(i+j) * minor(i, j)
                let minor = self.minor(i, j);
                let c = det_mod(&minor)?;
                let c = if (i + j) % 2 == 1 { super::arith::neg_mod(c, d) } else { c };
                out.entries[j * n + i] = mul_mod(c, det_inv, d);
            }
        }
        Ok(Some(out))
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> ZdMatrix {
        let n = self.rows;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != skip_row) {
            for j in (0..n).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j));
            }
        }
        ZdMatrix::from_residues(n - 1, n - 1, self.modulus, entries)
    }
}

impl fmt::Debug for ZdMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod {} ", self.modulus)?;
        f.debug_list().entries((0..self.rows).map(|i| &self.entries[i * self.cols..(i + 1) * self.cols])).finish()
    }
}

/// Determinant over `Z_d` by Euclidean row reduction.
///
/// Only unimodular row operations are used, so the result is exact for
/// composite moduli as well.
pub fn det_mod(a: &ZdMatrix) -> Result<u64, ZmodError> {
    if a.rows != a.cols {
        return Err(ZmodError::NotSquare { rows: a.rows, cols: a.cols });
    }
    let n = a.rows;
    let d = a.modulus;
    if d == 1 {
        return Ok(0);
    }
    let mut m: Vec<i128> = a.entries.iter().map(|&v| v as i128).collect();
    let md = d as i128;
    let mut negate = false;
    for k in 0..n {
        for i in k + 1..n {
            // Euclid on (m[k][k], m[i][k]) until the lower entry vanishes.
            while m[i * n + k] != 0 {
                let q = m[k * n + k] / m[i * n + k];
                for j in k..n {
                    m[k * n + j] = (m[k * n + j] - q * m[i * n + j]).rem_euclid(md);
                }
                for j in k..n {
                    m.swap(k * n + j, i * n + j);
                }
                negate = !negate;
            }
        }
    }
    let mut det = 1u64;
    for k in 0..n {
        det = mul_mod(det, m[k * n + k] as u64, d);
    }
    Ok(if negate { super::arith::neg_mod(det, d) } else { det })
}

/// True iff the matrix is invertible over `Z_d`.
pub fn is_invertible_mod(a: &ZdMatrix) -> Result<bool, ZmodError> {
    Ok(gcd_u64(det_mod(a)?, a.modulus) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cofactor expansion over the integers, reduced at the end.
    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn det_mod_examples() {
        let id = ZdMatrix::identity(2, 7);
        assert_eq!(det_mod(&id).unwrap(), 1);
        let a = ZdMatrix::from_rows(&[[2, 1], [1, 2]], 3).unwrap();
        assert_eq!(det_mod(&a).unwrap(), 0);
        let b = ZdMatrix::from_rows(&[[0, 1], [5, 1]], 6).unwrap();
        assert_eq!(cofactor_det(&[vec![0, 1], vec![5, 1]]).rem_euclid(6), 1);
        assert_eq!(det_mod(&b).unwrap(), 1);
    }

    #[test]
    fn det_mod_rejects_non_square() {
        let a = ZdMatrix::zeros(2, 3, 5);
        assert!(matches!(det_mod(&a), Err(ZmodError::NotSquare { .. })));
    }

    #[test]
    fn det_mod_matches_cofactor_on_grid() {
        // every 3x3 matrix with entries in 0..3, modulus 6
        let mut seen = 0;
        for code in 0..3i64.pow(9) {
            let mut c = code;
            let rows: Vec<Vec<i64>> = (0..3)
                .map(|_| {
                    (0..3)
                        .map(|_| {
                            let v = c % 3;
                            c /= 3;
                            v * 2 - 1
                        })
                        .collect()
                })
                .collect();
            let m = ZdMatrix::from_rows(&rows, 6).unwrap();
            assert_eq!(det_mod(&m).unwrap() as i64, cofactor_det(&rows).rem_euclid(6));
            seen += 1;
        }
        assert_eq!(seen, 19683);
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let rows = vec![vec![3, -2, 5, 1], vec![0, 4, -1, 2], vec![7, 1, 1, -3], vec![2, 2, -6, 9]];
        let m = IntMatrix::from_i64_rows(&rows);
        assert_eq!(m.determinant().unwrap(), BigInt::from(cofactor_det(&rows)));
        let singular = IntMatrix::from_i64_rows(&[[0, 0], [1, 2]]);
        assert_eq!(singular.determinant().unwrap(), BigInt::zero());
    }

    #[test]
    fn inverse_mod_composite() {
        let a = ZdMatrix::from_rows(&[[0, 1], [5, 1]], 6).unwrap();
        let inv = a.inverse().unwrap().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        let singular = ZdMatrix::from_rows(&[[2, 0], [0, 1]], 6).unwrap();
        assert!(singular.inverse().unwrap().is_none());
    }
}
