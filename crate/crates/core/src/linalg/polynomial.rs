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

use crate::error::{Error, Result};
use crate::linalg::scalar::Scalar;

/// Dense univariate polynomial; `coefficients[k]` multiplies `x^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<S> {
    coefficients: Vec<S>,
}

impl<S> Polynomial<S> {
    /// Panics on an empty coefficient list.
    pub fn new(coefficients: Vec<S>) -> Self {
        assert!(!coefficients.is_empty(), "polynomial needs at least one coefficient");
        Polynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[S] {
        &self.coefficients
    }

    /// Formal degree (number of stored coefficients minus one).
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> Result<&S> {
        self.coefficients
            .get(k)
            .ok_or(Error::CoefficientOutOfRange {
                index: k,
                degree: self.degree(),
            })
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> Polynomial<T> {
        Polynomial {
            coefficients: self.coefficients.iter().map(f).collect(),
        }
    }

    pub fn try_map<T, E>(&self, f: impl FnMut(&S) -> std::result::Result<T, E>) -> std::result::Result<Polynomial<T>, E> {
        Ok(Polynomial {
            coefficients: self.coefficients.iter().map(f).collect::<std::result::Result<_, _>>()?,
        })
    }
}

impl<S: Scalar> Polynomial<S> {
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![S::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Polynomial { coefficients: out }
    }

    pub fn eval(&self, x: &S) -> S {
        self.coefficients
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }
}
