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

use thiserror::Error;

/// Errors raised by graph construction, linear algebra and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("chain length must satisfy n >= 2, got n = {0}")]
    ChainTooShort(usize),

    #[error("invalid range: need 2 <= n_min <= n_max, got n_min = {min}, n_max = {max}")]
    InvalidRange { min: usize, max: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("matrix must be square: {entries} entries do not form an order-{order} matrix")]
    NotSquare { order: usize, entries: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("coefficient index {index} out of range for polynomial of degree {degree}")]
    CoefficientOutOfRange { index: usize, degree: usize },

    #[error("value {0} has a nonzero irrational component")]
    IrrationalResidue(String),

    #[error("value {0} is not an integer")]
    NotIntegral(String),

    #[error("{what}: expected {expected}, got {actual}")]
    Mismatch {
        what: String,
        expected: String,
        actual: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
