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

//! Kirchhoff index, Wiener index and spanning-tree counts of the linear
//! pentagonal cylinder `P_n` and the pentagonal Möbius chain `P'_n`.
//!
//! Every invariant is available through independent routes:
//!
//! * [`closed_forms`]: closed formulas evaluated exactly in
//!   `Q(√2, √3)` ([`surd`]),
//! * [`linalg`]: exact integer/rational determinants and characteristic
//!   polynomials (Bareiss, Faddeev–LeVerrier, Matrix-Tree),
//! * [`spectral`]: floating-point Jacobi eigendecomposition, Laplacian
//!   pseudoinverse and resistance distances,
//! * [`decomposition`]: the automorphism-reduced blocks `L_A`, `L_S` and
//!   their Vieta coefficients.
//!
//! [`verify`] cross-checks all of them, [`table`] reproduces the reference
//! table and [`report`] renders results as tables, CSV or JSON. The
//! [`cli`] module backs the `pentakirch` binary.

pub mod cli;
pub mod closed_forms;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod parallel;
pub mod report;
pub mod spectral;
pub mod surd;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{GraphFamily, Graph, Variant};
