use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal with
/// nonnegative entries forming a divisor chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The `min(rows, cols)` diagonal entries of `D`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Position of the nonzero entry of smallest absolute value in the trailing
/// submatrix starting at `(t, t)`; ties go to the first in row-major order.
fn select_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let v = &m[(i, j)];
            if v.is_zero() {
                continue;
            }
            match best {
                Some(b) if m[b].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form with a fixed pivot rule, so the output is a
/// deterministic function of the input.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = select_pivot(&d, t) else {
                // trailing block is zero
                return finish(d, u, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // a smaller remainder now exists; re-select
                continue;
            }

            // Enforce divisibility of the trailing block by the pivot.
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&d[(i, j)] % &d[(t, t)]).is_zero()));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(d, u, v)
}

fn finish(d: IntMatrix, u: IntMatrix, v: IntMatrix) -> SmithForm {
    SmithForm { d, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check_contract(a: &IntMatrix) {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.v.determinant().unwrap().abs().is_one());
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn coprime_diagonal() {
        let a = IntMatrix::diagonal(&[2, 3]);
        assert_eq!(smith_normal_form(&a).d, IntMatrix::diagonal(&[1, 6]));
        check_contract(&a);
    }

    #[test]
    fn identity_and_scalar() {
        assert_eq!(smith_normal_form(&IntMatrix::identity(3)).d, IntMatrix::identity(3));
        let ten = IntMatrix::from_i64_rows(&[[10]]);
        assert_eq!(smith_normal_form(&ten).d, ten);
    }

    #[test]
    fn empty_and_rectangular() {
        check_contract(&IntMatrix::zeros(0, 0));
        check_contract(&IntMatrix::zeros(0, 3));
        check_contract(&IntMatrix::zeros(2, 0));
        check_contract(&IntMatrix::from_i64_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]));
        check_contract(&IntMatrix::from_i64_rows(&[[4, 6], [6, 9], [2, 3]]));
        let s = smith_normal_form(&IntMatrix::from_i64_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]));
        assert_eq!(s.d, IntMatrix::diagonal(&[2, 6, 12]));
    }

    #[test]
    fn negative_pivot_is_normalized() {
        let s = smith_normal_form(&IntMatrix::from_i64_rows(&[[-4]]));
        assert_eq!(s.d, IntMatrix::from_i64_rows(&[[4]]));
        check_contract(&IntMatrix::from_i64_rows(&[[-4]]));
    }

    #[test]
    fn deterministic() {
        let a = IntMatrix::from_i64_rows(&[[3, 5, 7], [-2, 9, 1]]);
        assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
    }
}
