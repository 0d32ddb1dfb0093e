//! Enumeration of `GL(n, Z_d)`.
//!
//! A matrix over `Z_d` is invertible iff its rows are linearly independent
//! modulo every prime `p | d`. Rows are chosen one at a time and a partial
//! choice is kept only while that condition holds, so every invertible matrix
//! is produced exactly once, in lexicographic order of its entries.

use alloc::vec::Vec;

use super::arith::{factorize, inv_mod};
use super::{ZdMatrix, ZmodError};

/// Default cap on `|GL(n, Z_d)|` for exhaustive searches.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// `|GL(n, Z_d)|`, saturating at `u128::MAX`.
pub fn gl_order(n: usize, d: u64) -> u128 {
    let mut total: u128 = 1;
    for (p, e) in factorize(d) {
        let p = p as u128;
        let Some(pn) = p.checked_pow(n as u32) else {
            return u128::MAX;
        };
        let mut pi: u128 = 1;
        for _ in 0..n {
            total = match total.checked_mul(pn - pi) {
                Some(t) => t,
                None => return u128::MAX,
            };
            pi *= p;
        }
        let lift_exp = (e as u64 - 1) * (n as u64) * (n as u64);
        for _ in 0..lift_exp {
            total = match total.checked_mul(p) {
                Some(t) => t,
                None => return u128::MAX,
            };
        }
    }
    total
}

/// Streams every invertible `n×n` matrix over `Z_d` exactly once.
///
/// Fails when the group order exceeds `budget`.
pub fn enumerate_invertible(n: usize, d: u64, budget: u128) -> Result<InvertibleMatrices, ZmodError> {
    if d < 2 {
        return Err(ZmodError::InvalidModulus(d));
    }
    let order = gl_order(n, d);
    if order > budget {
        return Err(ZmodError::BudgetExceeded { estimated_order: order, budget });
    }
    let row_space = (d as u128).pow(n as u32);
    Ok(InvertibleMatrices {
        n,
        d,
        primes: factorize(d).into_iter().map(|(p, _)| p).collect(),
        row_space: row_space as u64,
        rows: Vec::with_capacity(n),
        state: State::Fresh,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

#[derive(Clone, Debug)]
pub struct InvertibleMatrices {
    n: usize,
    d: u64,
    primes: Vec<u64>,
    row_space: u64,
    rows: Vec<u64>,
    state: State,
}

impl InvertibleMatrices {
    fn decode_row(&self, code: u64, out: &mut Vec<u64>) {
        let mut c = code;
        let start = out.len();
        out.resize(start + self.n, 0);
        for j in (0..self.n).rev() {
            out[start + j] = c % self.d;
            c /= self.d;
        }
    }

    /// Whether `self.rows` extended by `candidate` stays independent mod every prime.
    fn extendable(&self, candidate: u64) -> bool {
        let k = self.rows.len() + 1;
        let mut buf = Vec::with_capacity(k * self.n);
        for &r in &self.rows {
            self.decode_row(r, &mut buf);
        }
        self.decode_row(candidate, &mut buf);
        self.primes.iter().all(|&p| rank_mod_prime(&buf, k, self.n, p) == k)
    }

    fn current(&self) -> ZdMatrix {
        let mut buf = Vec::with_capacity(self.n * self.n);
        for &r in &self.rows {
            self.decode_row(r, &mut buf);
        }
        ZdMatrix::from_residues(self.n, self.n, self.d, buf)
    }

    /// Depth-first search for the next full matrix starting at `start` on the current level.
    fn advance(&mut self, mut start: u64) -> bool {
        loop {
            match (start..self.row_space).find(|&c| self.extendable(c)) {
                Some(c) => {
                    self.rows.push(c);
                    if self.rows.len() == self.n {
                        return true;
                    }
                    start = 0;
                }
                None => match self.rows.pop() {
                    Some(prev) => start = prev + 1,
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for InvertibleMatrices {
    type Item = ZdMatrix;

    fn next(&mut self) -> Option<ZdMatrix> {
        match self.state {
            State::Done => None,
            State::Fresh if self.n == 0 => {
                self.state = State::Done;
                Some(ZdMatrix::zeros(0, 0, self.d))
            }
            State::Fresh => {
                self.state = State::Running;
                if self.advance(0) {
                    Some(self.current())
                } else {
                    self.state = State::Done;
                    None
                }
            }
            State::Running => {
                let last = self.rows.pop().expect("full row stack");
                if self.advance(last + 1) {
                    Some(self.current())
                } else {
                    self.state = State::Done;
                    None
                }
            }
        }
    }
}

/// Rank of a `rows × cols` matrix over the field with `p` elements.
fn rank_mod_prime(entries: &[u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut m: Vec<u64> = entries.iter().map(|&v| v % p).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        for j in 0..cols {
            m.swap(rank * cols + j, pivot * cols + j);
        }
        let inv = inv_mod(m[rank * cols + col], p).expect("nonzero in a field");
        for r in 0..rows {
            if r == rank || m[r * cols + col] == 0 {
                continue;
            }
            let f = m[r * cols + col] * inv % p;
            for j in 0..cols {
                m[r * cols + j] = (m[r * cols + j] + (p - f) * m[rank * cols + j]) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmod::matrix::is_invertible_mod;

    fn brute_force_count(n: usize, d: u64) -> u64 {
        let total = d.pow((n * n) as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let entries: Vec<i64> = (0..n * n)
                    .map(|_| {
                        let v = c % d;
                        c /= d;
                        v as i64
                    })
                    .collect();
                is_invertible_mod(&ZdMatrix::new(n, n, d, entries).unwrap()).unwrap()
            })
            .count() as u64
    }

    #[test]
    fn units_of_z6() {
        let all: Vec<ZdMatrix> = enumerate_invertible(1, 6, DEFAULT_BUDGET).unwrap().collect();
        let values: Vec<u64> = all.iter().map(|m| m.get(0, 0)).collect();
        assert_eq!(values, [1, 5]);
    }

    #[test]
    fn small_general_linear_groups() {
        assert_eq!(brute_force_count(2, 2), 6);
        assert_eq!(enumerate_invertible(2, 2, DEFAULT_BUDGET).unwrap().count(), 6);
        assert_eq!(brute_force_count(3, 2), 168);
        assert_eq!(enumerate_invertible(3, 2, DEFAULT_BUDGET).unwrap().count(), 168);
        assert_eq!(gl_order(3, 7), 33_784_128);
    }

    #[test]
    fn rank_zero_group_is_trivial() {
        assert_eq!(enumerate_invertible(0, 5, DEFAULT_BUDGET).unwrap().count(), 1);
        assert_eq!(gl_order(0, 12), 1);
    }

    #[test]
    fn budget_is_enforced() {
        match enumerate_invertible(4, 7, DEFAULT_BUDGET) {
            Err(ZmodError::BudgetExceeded { estimated_order, budget }) => {
                assert_eq!(estimated_order, gl_order(4, 7));
                assert_eq!(budget, DEFAULT_BUDGET);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(enumerate_invertible(2, 2, 5).is_err());
        assert!(enumerate_invertible(2, 2, 6).is_ok());
    }

    #[test]
    fn enumeration_is_restartable_and_lexicographic() {
        let a: Vec<ZdMatrix> = enumerate_invertible(2, 3, DEFAULT_BUDGET).unwrap().collect();
        let b: Vec<ZdMatrix> = enumerate_invertible(2, 3, DEFAULT_BUDGET).unwrap().collect();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0].entries() < w[1].entries()));
        assert!(a.iter().all(|m| is_invertible_mod(m).unwrap()));
    }
}
