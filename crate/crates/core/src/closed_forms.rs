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

//! Closed-form invariants of the two chain families, evaluated exactly.
//!
//! Surd expressions are expanded in `Q(√2, √3)`; every closed-form value
//! must land back in `Q` (or `Z`), and an irrational residue is reported as
//! an error rather than rounded away.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{GraphFamily, Variant};
use crate::linalg::{ratio, rational};
use crate::surd::{trace_power_t, SurdValue};

/// `Σ 1/ρ` over the nonzero eigenvalues of the symmetric-mode block:
/// `(25n² + 30n - 13) / 60`.
pub fn alpha_reciprocal_sum(n: usize) -> BigRational {
    let n = n as i64;
    ratio(25 * n * n + 30 * n - 13, 60)
}

/// Linear coefficient of the symmetric-mode characteristic polynomial:
/// `(-1)^(n+1) 2^n 5 n²`.
pub fn alpha_linear_coefficient(n: usize) -> BigInt {
    let magnitude = (BigInt::one() << n) * BigInt::from(5 * n * n);
    if n % 2 == 1 {
        magnitude
    } else {
        -magnitude
    }
}

/// Sum of the principal `(2n-1)`-minors of the antisymmetric-mode block,
/// from its surd closed form. Identical for both variants.
pub fn beta_closed_form(n: usize) -> Result<BigInt> {
    beta_surd_expression(n).to_integer()
}

/// The unreduced surd expression behind [`beta_closed_form`].
pub fn beta_surd_expression(n: usize) -> SurdValue {
    assert!(n >= 1, "closed form needs n >= 1");
    let k = n as i64;
    let q = |num: i64, den: i64| SurdValue::from_rational(ratio(num, den));

    let root6_lo = SurdValue::from_ints(5, 0, 0, -2); // 5 - 2√6
    let root6_hi = SurdValue::from_ints(5, 0, 0, 2); // 5 + 2√6
    let first = &(&SurdValue::from_ints(4, 0, 0, -2) * &root6_lo.pow(n as u64 - 1))
        - &(&SurdValue::from_ints(4, 0, 0, 2) * &root6_hi.pow(n as u64 - 1));
    let first = &(&q(7, 192) * &SurdValue::sqrt6()) * &first;

    let small = SurdValue::from_ints(0, -1, 1, 0); // √3 - √2
    let large = SurdValue::from_ints(0, 1, 1, 0); // √3 + √2
    let odd = 2 * n as u64 - 1;
    let second = &(&SurdValue::from_ints(4 * k + 1, 0, 0, -2 * k) * &small.pow(odd))
        + &(&SurdValue::from_ints(4 * k + 1, 0, 0, 2 * k) * &large.pow(odd));
    let second = &(&q(7, 48) * &SurdValue::sqrt3()) * &second;

    first + second
}

/// `(√2+√3)^(2n) + (√2-√3)^(2n) ∓ 2`, the determinant of the
/// antisymmetric-mode block (minus for the cylinder, plus for the Möbius
/// chain), evaluated in surd arithmetic.
pub fn antisymmetric_determinant_closed(family: &GraphFamily) -> Result<BigInt> {
    let n = family.n() as u64;
    let up = SurdValue::from_ints(0, 1, 1, 0);
    let down = SurdValue::from_ints(0, 1, -1, 0);
    let shift = SurdValue::from_integer(corner_shift(family.variant()));
    (up.pow(2 * n) + down.pow(2 * n) + shift).to_integer()
}

fn corner_shift(variant: Variant) -> i64 {
    match variant {
        Variant::Cylinder => -2,
        Variant::Moebius => 2,
    }
}

/// Exact Kirchhoff index `5n ((25n²+30n-13)/60 + β / (t_n ∓ 2))`.
pub fn kirchhoff_closed(family: &GraphFamily) -> Result<BigRational> {
    let n = family.n();
    let beta = BigRational::from_integer(beta_closed_form(n)?);
    let det = BigRational::from_integer(antisymmetric_determinant_closed(family)?);
    if det.is_zero() {
        return Err(Error::Mismatch {
            what: "antisymmetric determinant".into(),
            expected: "nonzero".into(),
            actual: "0".into(),
        });
    }
    Ok(rational(5 * n as i64) * (alpha_reciprocal_sum(n) + beta / det))
}

/// `2^n n (t_n ∓ 2)`.
pub fn spanning_trees_closed(family: &GraphFamily) -> BigInt {
    let n = family.n();
    (BigInt::one() << n)
        * BigInt::from(n)
        * (trace_power_t(n) + BigInt::from(corner_shift(family.variant())))
}

/// `25n³/4 + 9n²` with the parity and twist corrections.
pub fn wiener_closed(family: &GraphFamily) -> Result<BigInt> {
    let n = family.n() as i64;
    let base = ratio(25 * n * n * n, 4) + rational(9 * n * n);
    let correction = match (family.variant(), n % 2 == 0) {
        (Variant::Cylinder, true) => rational(0),
        (Variant::Cylinder, false) => ratio(n, 4),
        (Variant::Moebius, true) => rational(2 * n),
        (Variant::Moebius, false) => ratio(9 * n, 4),
    };
    let w = base - correction;
    if !w.is_integer() {
        return Err(Error::NotIntegral(w.to_string()));
    }
    Ok(w.to_integer())
}

/// One point of the `W / Kf` series.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioPoint {
    pub n: usize,
    pub kirchhoff: BigRational,
    pub wiener: BigInt,
    pub ratio: f64,
}

pub fn ratio_point(family: &GraphFamily) -> Result<RatioPoint> {
    let kirchhoff = kirchhoff_closed(family)?;
    let wiener = wiener_closed(family)?;
    let exact = BigRational::from_integer(wiener.clone()) / &kirchhoff;
    Ok(RatioPoint {
        n: family.n(),
        ratio: exact.to_f64().unwrap_or(f64::NAN),
        kirchhoff,
        wiener,
    })
}

/// `W/Kf` for `n = 2..=n_max`, from the exact values.
pub fn ratio_series(variant: Variant, n_max: usize) -> Result<Vec<RatioPoint>> {
    if n_max < 2 {
        return Err(Error::ChainTooShort(n_max));
    }
    (2..=n_max)
        .map(|n| ratio_point(&GraphFamily::new(variant, n)?))
        .collect()
}

pub fn is_strictly_increasing(points: &[RatioPoint]) -> bool {
    points.windows(2).all(|w| w[0].ratio < w[1].ratio)
}
