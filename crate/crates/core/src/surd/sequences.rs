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

//! Integer sequences behind the determinant closed forms.
//!
//! `r_i` and `r'_i` are the leading and trailing principal minors of the
//! open alternating band matrix (diagonal `4, 3, 4, 3, ...`, `-1` beside
//! it). Both satisfy `x_i = 10 x_{i-2} - x_{i-4}`, whose characteristic
//! roots are `±(√2 + √3)` and `±(√2 - √3)`.

use num_bigint::BigInt;

use crate::linalg::ratio;
use crate::surd::SurdValue;

/// `t_n = (5 + 2√6)^n + (5 - 2√6)^n`, via `t_{k+1} = 10 t_k - t_{k-1}`.
pub fn trace_power_t(n: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::from(10));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = BigInt::from(10) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn four_term_recurrence(seeds: [i64; 4], len: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = seeds.iter().take(len).map(|&s| BigInt::from(s)).collect();
    while out.len() < len {
        let i = out.len();
        let next = BigInt::from(10) * &out[i - 2] - &out[i - 4];
        out.push(next);
    }
    out
}

/// `r_0 ..= r_{len-1}`.
pub fn r_sequence_upto(len: usize) -> Vec<BigInt> {
    four_term_recurrence([1, 4, 11, 40], len)
}

/// `r'_0 ..= r'_{len-1}`; seeds come from `(x² + 3x + 1)/(x⁴ - 10x² + 1)`.
pub fn r_prime_sequence_upto(len: usize) -> Vec<BigInt> {
    four_term_recurrence([1, 3, 11, 30], len)
}

pub fn r_sequence(i: usize) -> BigInt {
    r_sequence_upto(i + 1).pop().expect("nonempty")
}

pub fn r_prime_sequence(i: usize) -> BigInt {
    r_prime_sequence_upto(i + 1).pop().expect("nonempty")
}

/// `√2+√3, -√2-√3, √2-√3, -√2+√3`.
pub fn characteristic_roots() -> [SurdValue; 4] {
    [
        SurdValue::from_ints(0, 1, 1, 0),
        SurdValue::from_ints(0, -1, -1, 0),
        SurdValue::from_ints(0, 1, -1, 0),
        SurdValue::from_ints(0, -1, 1, 0),
    ]
}

/// Weights `s_1..s_4` of the roots in the closed form of `r_i`, each of
/// the shape `(±√2 ± √3)(±2 + √3) / (4√6)`.
pub fn r_closed_form_constants() -> [SurdValue; 4] {
    let roots = characteristic_roots();
    let two_plus = SurdValue::from_ints(2, 0, 1, 0);
    let two_minus = SurdValue::from_ints(-2, 0, 1, 0);
    let denom = SurdValue::from_ints(0, 0, 0, 4);
    let q = |root: &SurdValue, factor: &SurdValue| &(root * factor) / &denom;
    [
        q(&roots[0], &two_plus),
        q(&roots[0], &two_minus),
        q(&roots[2], &two_minus),
        q(&roots[2], &two_plus),
    ]
}

/// `Σ_k s_k ρ_k^i` evaluated exactly.
pub fn r_closed_form(i: usize) -> SurdValue {
    let weights = r_closed_form_constants();
    characteristic_roots()
        .iter()
        .zip(&weights)
        .fold(SurdValue::from_rational(ratio(0, 1)), |acc, (root, w)| {
            acc + &(w * &root.pow(i as u64))
        })
}
