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
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{laplacian, Graph};
use crate::linalg::charpoly::char_poly_integer;
use crate::linalg::det::det_bareiss;
use crate::linalg::matrix::DenseMatrix;

/// Number of spanning trees, as the determinant of the Laplacian with
/// row and column 0 removed. Zero for a disconnected graph.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    spanning_tree_count_deleting(g, 0)
}

/// Matrix-Tree count using the cofactor at `vertex`.
pub fn spanning_tree_count_deleting(g: &Graph, vertex: usize) -> BigInt {
    if g.vertex_count() == 1 {
        return BigInt::one();
    }
    let reduced = laplacian(g)
        .map(|&v| BigInt::from(v))
        .minor(vertex, vertex)
        .expect("order is at least 2");
    det_bareiss(&reduced)
}

/// Kirchhoff index from the exact Laplacian characteristic polynomial.
///
/// Writing `det(xI - L) = x q(x)`, the reciprocal sum of the nonzero
/// eigenvalues is `-q'(0)/q(0) = -c_2/c_1`, so `Kf = |V| (-c_2 / c_1)`.
pub fn kirchhoff_exact(g: &Graph) -> Result<BigRational> {
    let order = g.vertex_count();
    if order == 1 {
        return Ok(BigRational::zero());
    }
    let l: DenseMatrix<BigInt> = laplacian(g).map(|&v| BigInt::from(v));
    let p = char_poly_integer(&l);
    let c1 = p.coefficient(1)?.clone();
    if c1.is_zero() {
        return Err(Error::Disconnected);
    }
    let c2 = p.coefficient(2)?.clone();
    Ok(BigRational::new(-c2 * BigInt::from(order), c1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_pentagonal_cylinder, build_pentagonal_moebius};
    use crate::linalg::scalar::ratio;

    #[test]
    fn triangle_has_three_trees() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(spanning_tree_count(&g), BigInt::from(3));
        assert_eq!(kirchhoff_exact(&g).unwrap(), ratio(2, 1));
    }

    #[test]
    fn smallest_chains() {
        assert_eq!(spanning_tree_count(&build_pentagonal_cylinder(2).unwrap()), BigInt::from(768));
        assert_eq!(spanning_tree_count(&build_pentagonal_moebius(2).unwrap()), BigInt::from(800));
    }

    #[test]
    fn independent_of_deleted_vertex() {
        for n in [2, 3] {
            for g in [build_pentagonal_cylinder(n).unwrap(), build_pentagonal_moebius(n).unwrap()] {
                let first = spanning_tree_count(&g);
                for v in 0..g.vertex_count() {
                    assert_eq!(spanning_tree_count_deleting(&g, v), first);
                }
            }
        }
    }

    #[test]
    fn disconnected_graph() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(spanning_tree_count(&g).is_zero());
        assert_eq!(kirchhoff_exact(&g), Err(Error::Disconnected));
    }

    #[test]
    fn exact_kirchhoff_smallest_chains() {
        // 39 + 1/12 and 77/2
        assert_eq!(kirchhoff_exact(&build_pentagonal_cylinder(2).unwrap()).unwrap(), ratio(469, 12));
        assert_eq!(kirchhoff_exact(&build_pentagonal_moebius(2).unwrap()).unwrap(), ratio(77, 2));
    }

    #[test]
    fn vieta_linear_coefficient_counts_trees() {
        // coefficient of x in det(xI - L) is (-1)^(order-1) |V| tau(G)
        for n in [2, 3, 4] {
            let g = build_pentagonal_moebius(n).unwrap();
            let l = laplacian(&g).map(|&v| BigInt::from(v));
            let p = char_poly_integer(&l);
            assert!(p.coefficient(0).unwrap().is_zero());
            let order = g.vertex_count();
            let expected = spanning_tree_count(&g) * BigInt::from(order);
            let expected = if (order - 1).is_multiple_of(2) { expected } else { -expected };
            assert_eq!(*p.coefficient(1).unwrap(), expected);
        }
    }
}
