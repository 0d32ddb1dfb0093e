use core::fmt;

use super::SurgeryError;
use crate::zmod::arith::{gcd_i64, reduce};

/// A reduced surgery slope `p/q` with `q >= 1`; integer framings are `p/1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurgeryCoefficient {
    p: i64,
    q: i64,
}

impl SurgeryCoefficient {
    pub fn new(p: i64, q: i64) -> Result<Self, SurgeryError> {
        if q < 1 {
            return Err(SurgeryError::NonPositiveDenominator(q));
        }
        if gcd_i64(p, q) != 1 {
            return Err(SurgeryError::NotReduced { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn integer(p: i64) -> Self {
        Self { p, q: 1 }
    }

    pub fn numerator(self) -> i64 {
        self.p
    }

    pub fn denominator(self) -> i64 {
        self.q
    }

    pub fn is_integral(self) -> bool {
        self.q == 1
    }

    /// Shape `q'/(d·s)`: the denominator is a positive multiple of `d`.
    pub fn is_weak_type_d(self, d: u64) -> bool {
        d >= 2 && self.q as u64 % d == 0
    }

    /// Weak type-`d` with numerator `≡ ±1 (mod d)`.
    pub fn is_type_d(self, d: u64) -> bool {
        if !self.is_weak_type_d(d) {
            return false;
        }
        let r = reduce(self.p, d);
        r == 1 || r == d - 1
    }
}

impl fmt::Display for SurgeryCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// [`SurgeryCoefficient::is_type_d`] as a free function.
pub fn is_type_d(c: SurgeryCoefficient, d: u64) -> bool {
    c.is_type_d(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_d_examples() {
        assert!(is_type_d(SurgeryCoefficient::new(1, 3).unwrap(), 3));
        assert!(!is_type_d(SurgeryCoefficient::new(2, 5).unwrap(), 5));
        assert!(SurgeryCoefficient::new(2, 5).unwrap().is_weak_type_d(5));
        assert!(is_type_d(SurgeryCoefficient::new(-2, 5).unwrap(), 5) == false);
        assert!(is_type_d(SurgeryCoefficient::new(4, 5).unwrap(), 5));
        assert!(is_type_d(SurgeryCoefficient::new(-1, 10).unwrap(), 5));
        assert!(!is_type_d(SurgeryCoefficient::integer(1), 3));
        assert!(!is_type_d(SurgeryCoefficient::new(1, 4).unwrap(), 3));
    }

    #[test]
    fn rejects_unreduced_and_bad_denominators() {
        assert!(matches!(SurgeryCoefficient::new(2, 4), Err(SurgeryError::NotReduced { .. })));
        assert!(matches!(SurgeryCoefficient::new(1, 0), Err(SurgeryError::NonPositiveDenominator(0))));
        assert!(matches!(SurgeryCoefficient::new(1, -3), Err(SurgeryError::NonPositiveDenominator(-3))));
        assert!(SurgeryCoefficient::new(0, 1).is_ok());
        assert!(SurgeryCoefficient::new(0, 2).is_err());
    }
}
