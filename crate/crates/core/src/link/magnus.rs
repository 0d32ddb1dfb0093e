use core::ops::Mul;

/// An element of `Z⟨X1, X2⟩` truncated above degree 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Magnus {
    pub c: i64,
    pub a: [i64; 2],
    /// `b[i][j]` is the coefficient of `X_{i+1} X_{j+1}`.
    pub b: [[i64; 2]; 2],
}

impl Magnus {
    pub const ONE: Self = Self { c: 1, a: [0; 2], b: [[0; 2]; 2] };

    /// `1 + X_{i+1}`, or `1` when `i` is not a tracked variable.
    pub fn generator(i: usize) -> Self {
        let mut m = Self::ONE;
        if i < 2 {
            m.a[i] = 1;
        }
        m
    }

    fn sub(self, o: Self) -> Self {
        let mut r = self;
        r.c -= o.c;
        for i in 0..2 {
            r.a[i] -= o.a[i];
            for j in 0..2 {
                r.b[i][j] -= o.b[i][j];
            }
        }
        r
    }

    fn add(self, o: Self) -> Self {
        self.sub(Self::ZERO.sub(o))
    }

    const ZERO: Self = Self { c: 0, a: [0; 2], b: [[0; 2]; 2] };

    /// Inverse of an element with constant term 1: `1 - u + u²`.
    pub fn inverse(self) -> Self {
        debug_assert_eq!(self.c, 1);
        let u = self.sub(Self::ONE);
        Self::ONE.sub(u).add(u * u)
    }

    pub fn pow(self, e: i8) -> Self {
        let base = if e < 0 { self.inverse() } else { self };
        (0..e.unsigned_abs()).fold(Self::ONE, |acc, _| acc * base)
    }
}

impl Mul for Magnus {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let mut r = Self::ZERO;
        r.c = self.c * o.c;
        for i in 0..2 {
            r.a[i] = self.c * o.a[i] + self.a[i] * o.c;
            for j in 0..2 {
                r.b[i][j] = self.c * o.b[i][j] + self.b[i][j] * o.c + self.a[i] * o.a[j];
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_commutator() {
        let x = Magnus::generator(0);
        let y = Magnus::generator(1);
        assert_eq!(x * x.inverse(), Magnus::ONE);
        assert_eq!(y.inverse() * y, Magnus::ONE);
        assert_eq!(Magnus::generator(2), Magnus::ONE);
        // [x, y] = 1 + X1X2 - X2X1 + (degree 3)
        let comm = x * y * x.inverse() * y.inverse();
        assert_eq!(comm.a, [0, 0]);
        assert_eq!(comm.b, [[0, 1], [-1, 0]]);
        assert_eq!(x.pow(-2), x.inverse() * x.inverse());
        assert_eq!(x.pow(2).b[0][0], 1);
    }
}
