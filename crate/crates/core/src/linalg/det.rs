// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::linalg::matrix::DenseMatrix;

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions
/// by the previous pivot are exact. A zero pivot is replaced by a row
/// swap below it; if none exists the determinant is zero.
pub fn det_bareiss(m: &DenseMatrix<BigInt>) -> BigInt {
    let n = m.order();
    let mut a = m.clone().into_rows();
    let mut negate = false;
    let mut prev = BigInt::one();

    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let scaled = pivot * &row[j];
                let updated = if factor.is_zero() {
                    if scaled.is_zero() {
                        continue;
                    }
                    scaled
                } else {
                    scaled - &factor * &pivot_row[j]
                };
                row[j] = updated / &prev;
            }
        }
        prev = a[k][k].clone();
    }

    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Signed cofactor `(-1)^(row+col) · det(M without row, col)`.
pub fn cofactor(m: &DenseMatrix<BigInt>, row: usize, col: usize) -> Result<BigInt> {
    if m.order() == 1 && row == 0 && col == 0 {
        // empty minor
        return Ok(BigInt::one());
    }
    let det = det_bareiss(&m.minor(row, col)?);
    Ok(if (row + col).is_multiple_of(2) { det } else { -det })
}

/// Tridiagonal second-difference matrix: `-2` on the diagonal, `1` beside it.
pub fn second_difference_matrix(order: usize) -> DenseMatrix<BigInt> {
    DenseMatrix::from_fn(order, |i, j| {
        if i == j {
            BigInt::from(-2)
        } else if i.abs_diff(j) == 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// Second-difference matrix with the diagonal entry at 1-based position
/// `defect` lowered from `-2` to `-3`.
pub fn second_difference_with_defect(order: usize, defect: usize) -> DenseMatrix<BigInt> {
    assert!((1..=order).contains(&defect), "defect position out of range");
    let mut m = second_difference_matrix(order);
    m.set(defect - 1, defect - 1, BigInt::from(-3));
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Leibniz expansion over all permutations.
    fn det_leibniz(m: &DenseMatrix<BigInt>) -> BigInt {
        fn rec(m: &DenseMatrix<BigInt>, row: usize, used: &mut Vec<bool>, sign: i32) -> BigInt {
            let n = m.order();
            if row == n {
                return BigInt::from(sign);
            }
            let mut total = BigInt::zero();
            let mut s = sign;
            // sign flips with the number of unused columns passed over
            for col in 0..n {
                if used[col] {
                    continue;
                }
                if !m.get(row, col).is_zero() {
                    used[col] = true;
                    total += m.get(row, col) * rec(m, row + 1, used, s);
                    used[col] = false;
                }
                s = -s;
            }
            total
        }
        rec(m, 0, &mut vec![false; m.order()], 1)
    }

    fn int_matrix(order: usize, values: &[i64]) -> DenseMatrix<BigInt> {
        DenseMatrix::from_fn(order, |i, j| BigInt::from(values[i * order + j]))
    }

    #[test]
    fn identity_has_unit_determinant() {
        assert_eq!(det_bareiss(&DenseMatrix::identity(5)), BigInt::one());
    }

    #[test]
    fn second_difference_examples() {
        assert_eq!(det_bareiss(&second_difference_matrix(4)), BigInt::from(5));
        assert_eq!(det_bareiss(&second_difference_with_defect(4, 2)), BigInt::from(11));
    }

    #[test]
    fn zero_pivot_requires_swap() {
        let m = int_matrix(3, &[0, 1, 2, 1, 0, 3, 4, -3, 8]);
        assert_eq!(det_bareiss(&m), det_leibniz(&m));
        assert_eq!(det_bareiss(&m), BigInt::from(-2));
    }

    #[test]
    fn singular_matrix_is_zero() {
        let m = int_matrix(3, &[1, 2, 3, 2, 4, 6, 0, 1, 1]);
        assert!(det_bareiss(&m).is_zero());
        let m = int_matrix(2, &[0, 0, 0, 5]);
        assert!(det_bareiss(&m).is_zero());
    }

    #[test]
    fn cofactor_of_scalar() {
        assert_eq!(cofactor(&int_matrix(1, &[7]), 0, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn cofactor_sign() {
        let m = int_matrix(3, &[1, 2, 3, 4, 5, 6, 7, 8, 10]);
        // minor without row 0, col 1: [[4,6],[7,10]] -> -2, sign -1
        assert_eq!(cofactor(&m, 0, 1).unwrap(), BigInt::from(2));
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(order in 1usize..=5, seed in proptest::collection::vec(-4i64..=4, 25)) {
            let m = int_matrix(order, &seed);
            prop_assert_eq!(det_bareiss(&m), det_leibniz(&m));
        }
    }
}
