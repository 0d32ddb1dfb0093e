//! Small-integer arithmetic helpers for moduli that fit in a machine word.

use alloc::vec::Vec;

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> u64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs())
}

/// Reduces a signed integer into `0..modulus`.
pub fn reduce(value: i64, modulus: u64) -> u64 {
    let m = modulus as i128;
    (value as i128).rem_euclid(m) as u64
}

pub fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

pub fn neg_mod(a: u64, modulus: u64) -> u64 {
    let a = a % modulus;
    if a == 0 {
        0
    } else {
        modulus - a
    }
}

/// Multiplicative inverse of `a` modulo `modulus`, if `a` is a unit.
pub fn inv_mod(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % modulus as i128, modulus as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(modulus as i128) as u64)
}

pub fn is_unit(a: u64, modulus: u64) -> bool {
    gcd_u64(a % modulus, modulus) == 1
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn smallest_odd_prime_factor(n: u64) -> Option<u64> {
    factorize(n).into_iter().map(|(p, _)| p).find(|&p| p != 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn inverses() {
        assert_eq!(inv_mod(5, 6), Some(5));
        assert_eq!(inv_mod(2, 6), None);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(0, 1), Some(0));
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(49), vec![(7, 2)]);
        assert_eq!(smallest_odd_prime_factor(16), None);
        assert_eq!(smallest_odd_prime_factor(30), Some(3));
        assert_eq!(smallest_odd_prime_factor(34), Some(17));
    }

    #[test]
    fn reduction_is_nonnegative() {
        assert_eq!(reduce(-5, 6), 1);
        assert_eq!(reduce(-12, 4), 0);
        assert_eq!(neg_mod(2, 3), 1);
    }
}
