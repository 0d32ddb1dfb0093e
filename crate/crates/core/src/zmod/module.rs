use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::arith::gcd_u64;
use super::smith::smith_normal_form;
use super::{IntMatrix, ZmodError};

/// A finitely generated `Z_d`-module, stored as its divisor chain
/// `f_1 | f_2 | ... | f_k`, each `f_i > 1` dividing `d`.
///
/// Two structures are isomorphic iff they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZdModuleStructure {
    modulus: u64,
    factors: Vec<u64>,
}

impl ZdModuleStructure {
    pub fn new(modulus: u64, factors: Vec<u64>) -> Result<Self, ZmodError> {
        if modulus < 2 {
            return Err(ZmodError::InvalidModulus(modulus));
        }
        for &f in &factors {
            if f <= 1 || modulus % f != 0 {
                return Err(ZmodError::InvalidFactor { factor: f, modulus });
            }
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(ZmodError::NotDivisorChain);
        }
        Ok(Self { modulus, factors })
    }

    pub fn trivial(modulus: u64) -> Self {
        Self::new(modulus, Vec::new()).expect("valid modulus")
    }

    /// `Z_d^rank`.
    pub fn free(modulus: u64, rank: usize) -> Self {
        Self::new(modulus, alloc::vec![modulus; rank]).expect("valid modulus")
    }

    /// Canonical form of `⊕ Z_{gcd(o, d)}` for arbitrary cyclic orders `o`,
    /// where an order of `0` stands for a copy of `Z`.
    pub fn from_cyclic_orders(modulus: u64, orders: &[u64]) -> Result<Self, ZmodError> {
        if modulus < 2 {
            return Err(ZmodError::InvalidModulus(modulus));
        }
        let diag: Vec<i64> = orders.iter().map(|&o| gcd_u64(o, modulus) as i64).collect();
        Ok(cokernel_mod(&IntMatrix::diagonal(&diag), modulus))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of `Z_d` summands.
    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|&&f| f == self.modulus).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.factors.iter().all(|&f| f == self.modulus)
    }

    /// Number of elements.
    pub fn order(&self) -> u128 {
        self.factors.iter().map(|&f| f as u128).product()
    }
}

impl fmt::Display for ZdModuleStructure {
    /// `0`, `Z_5^2`, `Z_2 + Z_4^3`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.factors.len() {
            let v = self.factors[i];
            let run = self.factors[i..].iter().take_while(|&&x| x == v).count();
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "Z_{v}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// `(Z^rows / column image of A) ⊗ Z_d`.
pub fn cokernel_mod(a: &IntMatrix, modulus: u64) -> ZdModuleStructure {
    assert!(modulus >= 2, "cokernel_mod needs d >= 2");
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let m = BigInt::from(modulus);
    let mut factors: Vec<u64> = diag
        .iter()
        .map(|v| u64::try_from(v.gcd(&m)).expect("gcd with d fits"))
        .chain(core::iter::repeat(modulus).take(a.rows() - diag.len()))
        .filter(|&f| f > 1)
        .collect();
    factors.sort_unstable();
    ZdModuleStructure { modulus, factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    /// Counts `Z^2 / im(A)` tensored with `Z_d` by enumerating representatives.
    ///
    /// For a nonsingular 2x2 `A` with `|det| = D`, the lattice `im(A)` contains
    /// `D·Z^2`, so `Z^2/im(A)` is a quotient of `(Z_D)^2`. Tensoring with `Z_d`
    /// further quotients by `d`; we enumerate `(Z_{D})^2` modulo the sublattice
    /// spanned by `A`'s columns and `d·e_i`, counting cosets and element orders.
    fn brute_force_2x2(a: [[i64; 2]; 2], d: i64) -> (usize, usize) {
        let det = (a[0][0] * a[1][1] - a[0][1] * a[1][0]).abs();
        let big = det * d;
        let gens = [[a[0][0], a[1][0]], [a[0][1], a[1][1]], [d, 0], [0, d]];
        // closure of the subgroup generated by `gens` inside (Z_big)^2
        let mut in_sub = vec![false; (big * big) as usize];
        let idx = |x: i64, y: i64| (x.rem_euclid(big) * big + y.rem_euclid(big)) as usize;
        in_sub[0] = true;
        let mut frontier = vec![(0i64, 0i64)];
        while let Some((x, y)) = frontier.pop() {
            for g in &gens {
                let k = idx(x + g[0], y + g[1]);
                if !in_sub[k] {
                    in_sub[k] = true;
                    frontier.push(((x + g[0]).rem_euclid(big), (y + g[1]).rem_euclid(big)));
                }
            }
        }
        let sub = in_sub.iter().filter(|&&b| b).count();
        let cosets = (big * big) as usize / sub;
        // exponent: smallest e with e·(1,0), e·(0,1) in the subgroup
        let exponent = (1..=big)
            .find(|&e| in_sub[idx(e, 0)] && in_sub[idx(0, e)])
            .unwrap() as usize;
        (cosets, exponent)
    }

    #[test]
    fn lens_like_scalar() {
        // coker(Z --12--> Z) ⊗ Z_4
        let m = cokernel_mod(&IntMatrix::from_i64_rows(&[[12]]), 4);
        assert_eq!(m, ZdModuleStructure::free(4, 1));
    }

    #[test]
    fn zero_map() {
        let m = cokernel_mod(&IntMatrix::zeros(3, 3), 5);
        assert_eq!(m.to_string(), "Z_5^3");
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn hopf_like_matrix_against_enumeration() {
        let (order, exponent) = brute_force_2x2([[0, 1], [10, 3]], 5);
        assert_eq!((order, exponent), (5, 5));
        let m = cokernel_mod(&IntMatrix::from_i64_rows(&[[0, 1], [10, 3]]), 5);
        assert_eq!(m, ZdModuleStructure::free(5, 1));
        assert_eq!(m.order(), order as u128);
    }

    #[test]
    fn composite_modulus_against_enumeration() {
        for a in [[[2, 0], [0, 3]], [[4, 2], [2, 4]], [[6, 0], [0, 4]], [[3, 1], [1, 3]]] {
            for d in [2, 4, 6, 12] {
                let (order, exponent) = brute_force_2x2(a, d);
                let rows: [[i64; 2]; 2] = a;
                let m = cokernel_mod(&IntMatrix::from_i64_rows(&rows), d as u64);
                assert_eq!(m.order(), order as u128, "{a:?} d={d}");
                assert_eq!(m.factors().last().copied().unwrap_or(1), exponent as u64, "{a:?} d={d}");
            }
        }
    }

    #[test]
    fn free_rows_beyond_diagonal() {
        let m = cokernel_mod(&IntMatrix::from_i64_rows(&[[2], [0], [0]]), 4);
        assert_eq!(m.factors(), &[2, 4, 4]);
        assert_eq!(m.to_string(), "Z_2 + Z_4^2");
    }

    #[test]
    fn constructor_rejects_bad_chains() {
        assert!(ZdModuleStructure::new(6, vec![2, 3]).is_err());
        assert!(ZdModuleStructure::new(6, vec![4]).is_err());
        assert!(ZdModuleStructure::new(6, vec![1]).is_err());
        assert!(ZdModuleStructure::new(1, vec![]).is_err());
        assert!(ZdModuleStructure::new(6, vec![2, 6]).is_ok());
    }

    #[test]
    fn cyclic_orders_are_canonicalized() {
        let m = ZdModuleStructure::from_cyclic_orders(6, &[2, 3]).unwrap();
        assert_eq!(m, ZdModuleStructure::free(6, 1));
        assert_eq!(ZdModuleStructure::from_cyclic_orders(4, &[6]).unwrap().factors(), &[2]);
        assert!(ZdModuleStructure::from_cyclic_orders(4, &[]).unwrap().is_trivial());
    }
}
