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

use std::ops::Index;

use crate::error::{Error, Result};
use crate::linalg::scalar::Scalar;

/// Square matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<S> {
    order: usize,
    entries: Vec<S>,
}

impl<S> DenseMatrix<S> {
    pub fn from_vec(order: usize, entries: Vec<S>) -> Result<Self> {
        if order == 0 || entries.len() != order * order {
            return Err(Error::NotSquare {
                order,
                entries: entries.len(),
            });
        }
        Ok(DenseMatrix { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::from_vec(order, entries)
    }

    /// Panics if `order == 0`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(order > 0, "matrix order must be positive");
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        DenseMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> DenseMatrix<T> {
        DenseMatrix {
            order: self.order,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn into_rows(self) -> Vec<Vec<S>> {
        let order = self.order;
        let mut rows = Vec::with_capacity(order);
        let mut it = self.entries.into_iter();
        for _ in 0..order {
            rows.push(it.by_ref().take(order).collect());
        }
        rows
    }
}

impl<S: Clone> DenseMatrix<S> {
    /// Principal submatrix on the given (ordered) index set.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                actual: 0,
            });
        }
        Ok(Self::from_fn(indices.len(), |i, j| {
            self.get(indices[i], indices[j]).clone()
        }))
    }

    /// Matrix with row `row` and column `col` removed.
    pub fn minor(&self, row: usize, col: usize) -> Result<Self> {
        if self.order < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: self.order,
            });
        }
        let rows: Vec<usize> = (0..self.order).filter(|&i| i != row).collect();
        let cols: Vec<usize> = (0..self.order).filter(|&j| j != col).collect();
        Ok(Self::from_fn(self.order - 1, |i, j| {
            self.get(rows[i], cols[j]).clone()
        }))
    }

    /// Top-left `size × size` block.
    pub fn leading_block(&self, size: usize) -> Result<Self> {
        self.check_block(size)?;
        self.principal_submatrix(&(0..size).collect::<Vec<_>>())
    }

    /// Bottom-right `size × size` block.
    pub fn trailing_block(&self, size: usize) -> Result<Self> {
        self.check_block(size)?;
        self.principal_submatrix(&(self.order - size..self.order).collect::<Vec<_>>())
    }

    fn check_block(&self, size: usize) -> Result<()> {
        if size == 0 || size > self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                actual: size,
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.order + j] = value;
    }
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_, _| S::zero())
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn trace(&self) -> S {
        (0..self.order).fold(S::zero(), |acc, i| acc.add_ref(self.get(i, i)))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(DenseMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(DenseMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        })
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map(|a| a.mul_ref(factor))
    }

    /// Matrix product. Zero entries of `self` are skipped, which makes
    /// products with sparse left factors (Laplacians) cheap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(SparseRows::new(self).mul_dense(other))
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                actual: other.order,
            });
        }
        Ok(())
    }
}

impl<S> Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        self.get(i, j)
    }
}

/// Nonzero pattern of a matrix, reused across repeated left products.
pub(crate) struct SparseRows<S> {
    order: usize,
    rows: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> SparseRows<S> {
    pub(crate) fn new(m: &DenseMatrix<S>) -> Self {
        let rows = (0..m.order)
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseRows {
            order: m.order,
            rows,
        }
    }

    pub(crate) fn mul_dense(&self, other: &DenseMatrix<S>) -> DenseMatrix<S> {
        let n = self.order;
        let mut entries = vec![S::zero(); n * n];
        for (i, row) in self.rows.iter().enumerate() {
            let out = &mut entries[i * n..(i + 1) * n];
            for (k, a) in row {
                for (slot, b) in out.iter_mut().zip(other.row(*k)) {
                    if !b.is_zero() {
                        *slot = slot.add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        DenseMatrix { order: n, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_rows() {
        let err = DenseMatrix::from_rows(vec![vec![1i64, 2], vec![3]]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        assert!(DenseMatrix::<i64>::from_vec(2, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn sparse_product_matches_definition() {
        let a = DenseMatrix::from_rows(vec![vec![1i64, 0, 2], vec![0, 0, 0], vec![-1, 3, 0]]).unwrap();
        let b = DenseMatrix::from_rows(vec![vec![4i64, 1, 0], vec![2, 0, 5], vec![0, 1, 1]]).unwrap();
        let c = a.mul(&b).unwrap();
        let expected = DenseMatrix::from_fn(3, |i, j| (0..3).map(|k| a[(i, k)] * b[(k, j)]).sum());
        assert_eq!(c, expected);
    }

    #[test]
    fn blocks_and_minors() {
        let m = DenseMatrix::from_fn(4, |i, j| (10 * i + j) as i64);
        assert_eq!(m.leading_block(2).unwrap().entries(), &[0, 1, 10, 11]);
        assert_eq!(m.trailing_block(1).unwrap().entries(), &[33]);
        let minor = m.minor(1, 2).unwrap();
        assert_eq!(minor.row(0), &[0, 1, 3]);
        assert_eq!(minor.row(1), &[20, 21, 23]);
        assert!(m.leading_block(5).is_err());
    }
}
