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

//! Exact integer and rational linear algebra.

mod charpoly;
mod det;
mod matrix;
mod polynomial;
mod scalar;
mod trees;

pub use charpoly::{char_poly, char_poly_integer, char_poly_rational};
pub use det::{cofactor, det_bareiss, second_difference_matrix, second_difference_with_defect};
pub use matrix::DenseMatrix;
pub use polynomial::Polynomial;
pub use scalar::{ratio, rational, ExactDiv, Scalar};
pub use trees::{kirchhoff_exact, spanning_tree_count, spanning_tree_count_deleting};
