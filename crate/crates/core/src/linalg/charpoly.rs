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
use num_rational::BigRational;

use crate::linalg::matrix::{DenseMatrix, SparseRows};
use crate::linalg::polynomial::Polynomial;
use crate::linalg::scalar::ExactDiv;

/// Coefficients of `det(xI - M)` by the Faddeev–LeVerrier recurrence.
///
/// With `P_0 = 0` and `c_m = 1`, each step forms `N_k = P_{k-1} + c_{m-k+1} I`,
/// `P_k = M N_k` and `c_{m-k} = -tr(P_k) / k`. The only divisions are by
/// the step index, which are exact over any ring containing the
/// coefficients (integers included, since an integer matrix has an
/// integer characteristic polynomial).
pub fn char_poly<S: ExactDiv>(m: &DenseMatrix<S>) -> Polynomial<S> {
    let order = m.order();
    let sparse = SparseRows::new(m);
    let mut coefficients = vec![S::zero(); order + 1];
    coefficients[order] = S::one();

    let mut product = DenseMatrix::<S>::zeros(order);
    for k in 1..=order {
        let shift = coefficients[order + 1 - k].clone();
        let mut next = product;
        for i in 0..order {
            let diag = next.get(i, i).add_ref(&shift);
            next.set(i, i, diag);
        }
        product = sparse.mul_dense(&next);
        coefficients[order - k] = product.trace().neg_ref().div_integer(k as i64);
    }
    Polynomial::new(coefficients)
}

pub fn char_poly_rational(m: &DenseMatrix<BigRational>) -> Polynomial<BigRational> {
    char_poly(m)
}

pub fn char_poly_integer(m: &DenseMatrix<BigInt>) -> Polynomial<BigInt> {
    char_poly(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det::det_bareiss;
    use crate::linalg::scalar::rational;
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    fn to_rational(m: &DenseMatrix<i64>) -> DenseMatrix<BigRational> {
        m.map(|&v| rational(v))
    }

    #[test]
    fn single_edge_laplacian() {
        let l = DenseMatrix::from_rows(vec![vec![1i64, -1], vec![-1, 1]]).unwrap();
        let p = char_poly_rational(&to_rational(&l));
        assert_eq!(p.coefficients(), &[rational(0), rational(-2), rational(1)]);
    }

    #[test]
    fn alternating_band_constant_term() {
        // diagonal 4,3,4,3 with -1 neighbours and -1 corners
        let m = DenseMatrix::from_rows(vec![
            vec![4i64, -1, 0, -1],
            vec![-1, 3, -1, 0],
            vec![0, -1, 4, -1],
            vec![-1, 0, -1, 3],
        ])
        .unwrap();
        let p = char_poly_rational(&to_rational(&m));
        assert_eq!(*p.coefficient(0).unwrap(), rational(96));
        assert_eq!(*p.coefficient(1).unwrap(), rational(-140));
        assert_eq!(det_bareiss(&m.map(|&v| BigInt::from(v))), BigInt::from(96));
    }

    #[test]
    fn rational_entries() {
        // [[1/2, 1], [0, 1/3]] -> (x - 1/2)(x - 1/3)
        let m = DenseMatrix::from_rows(vec![
            vec![BigRational::new(1.into(), 2.into()), rational(1)],
            vec![rational(0), BigRational::new(1.into(), 3.into())],
        ])
        .unwrap();
        let p = char_poly_rational(&m);
        assert_eq!(
            p.coefficients(),
            &[
                BigRational::new(1.into(), 6.into()),
                BigRational::new((-5).into(), 6.into()),
                rational(1)
            ]
        );
    }

    proptest! {
        // det(xI - M) evaluated pointwise by Bareiss is an independent oracle.
        #[test]
        fn matches_pointwise_determinants(order in 1usize..=6, values in proptest::collection::vec(-5i64..=5, 36)) {
            let m = DenseMatrix::from_fn(order, |i, j| BigInt::from(values[i * order + j]));
            let p = char_poly_integer(&m);
            prop_assert_eq!(p.degree(), order);
            for x in -3i64..=3 {
                let shifted = DenseMatrix::from_fn(order, |i, j| {
                    let entry = -m.get(i, j).clone();
                    if i == j { entry + x } else { entry }
                });
                prop_assert_eq!(p.eval(&BigInt::from(x)), det_bareiss(&shifted));
            }
            let sign_adjusted = if order % 2 == 0 { det_bareiss(&m) } else { -det_bareiss(&m) };
            prop_assert_eq!(p.coefficient(0).unwrap().clone(), sign_adjusted);
            let rational_poly = char_poly_rational(&m.map(|v| BigRational::from_integer(v.clone())));
            prop_assert_eq!(rational_poly, p.map(|v| BigRational::from_integer(v.clone())));
        }
    }

    #[test]
    fn integer_path_handles_large_order() {
        let m = crate::linalg::det::second_difference_matrix(30);
        let p = char_poly_integer(&m);
        assert_eq!(p.coefficient(0).unwrap().abs(), BigInt::from(31));
        assert!(!p.coefficient(29).unwrap().is_zero());
    }
}
