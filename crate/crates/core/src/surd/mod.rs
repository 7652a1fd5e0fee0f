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

//! Exact arithmetic in `Q(√2, √3)` with basis `{1, √2, √3, √6}`.

mod sequences;

pub use sequences::{
    characteristic_roots, r_closed_form, r_closed_form_constants, r_prime_sequence,
    r_prime_sequence_upto, r_sequence, r_sequence_upto, trace_power_t,
};

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rational, ExactDiv, Scalar};

/// `a + b√2 + c√3 + d√6` with rational coefficients.
///
/// The four basis elements are linearly independent over `Q`, so the
/// coefficient tuple is the unique representation and equality is
/// componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdValue {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl SurdValue {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        SurdValue { a, b, c, d }
    }

    /// Integer coefficients on `1, √2, √3, √6`.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        SurdValue::new(rational(a), rational(b), rational(c), rational(d))
    }

    pub fn from_rational(a: BigRational) -> Self {
        SurdValue::new(a, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn from_integer(a: impl Into<BigInt>) -> Self {
        SurdValue::from_rational(BigRational::from_integer(a.into()))
    }

    pub fn sqrt2() -> Self {
        SurdValue::from_ints(0, 1, 0, 0)
    }

    pub fn sqrt3() -> Self {
        SurdValue::from_ints(0, 0, 1, 0)
    }

    pub fn sqrt6() -> Self {
        SurdValue::from_ints(0, 0, 0, 1)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    /// The value as a rational, or an error naming the irrational residue.
    pub fn to_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.a.clone())
        } else {
            Err(Error::IrrationalResidue(self.to_string()))
        }
    }

    pub fn to_integer(&self) -> Result<BigInt> {
        let a = self.to_rational()?;
        if a.is_integer() {
            Ok(a.to_integer())
        } else {
            Err(Error::NotIntegral(a.to_string()))
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        SurdValue::new(&self.a * k, &self.b * k, &self.c * k, &self.d * k)
    }

    /// Image under `√3 -> -√3` (so `√6 -> -√6`).
    pub fn conj_sqrt3(&self) -> Self {
        SurdValue::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    /// Image under `√2 -> -√2` (so `√6 -> -√6`).
    pub fn conj_sqrt2(&self) -> Self {
        SurdValue::new(self.a.clone(), -&self.b, self.c.clone(), -&self.d)
    }

    /// Multiplicative inverse, `None` for zero.
    ///
    /// Multiplying by the `√3`-conjugate lands in `Q(√2)`; multiplying
    /// that by its `√2`-conjugate lands in `Q`.
    pub fn inverse(&self) -> Option<Self> {
        let half = self * &self.conj_sqrt3();
        debug_assert!(half.c.is_zero() && half.d.is_zero());
        let norm_factor = half.conj_sqrt2();
        let norm = (&half * &norm_factor).a;
        if norm.is_zero() {
            return None;
        }
        let numerator = &self.conj_sqrt3() * &norm_factor;
        Some(numerator.scale(&norm.recip()))
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = SurdValue::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let f = |q: &BigRational| q.to_f64().unwrap_or(f64::NAN);
        f(&self.a) + f(&self.b) * 2f64.sqrt() + f(&self.c) * 3f64.sqrt() + f(&self.d) * 6f64.sqrt()
    }
}

pub fn surd_mul(x: &SurdValue, y: &SurdValue) -> SurdValue {
    x * y
}

pub fn surd_pow(x: &SurdValue, k: u64) -> SurdValue {
    x.pow(k)
}

impl<'a> Mul<&'a SurdValue> for &'a SurdValue {
    type Output = SurdValue;

    // √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2, √6·√6 = 6
    fn mul(self, o: &SurdValue) -> SurdValue {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let two = rational(2);
        let three = rational(3);
        let six = rational(6);
        SurdValue {
            a: a * &o.a + &two * (b * &o.b) + &three * (c * &o.c) + &six * (d * &o.d),
            b: a * &o.b + b * &o.a + &three * (c * &o.d + d * &o.c),
            c: a * &o.c + c * &o.a + &two * (b * &o.d + d * &o.b),
            d: a * &o.d + d * &o.a + b * &o.c + c * &o.b,
        }
    }
}

impl<'a> Add<&'a SurdValue> for &'a SurdValue {
    type Output = SurdValue;

    fn add(self, o: &SurdValue) -> SurdValue {
        SurdValue::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
}

impl<'a> Sub<&'a SurdValue> for &'a SurdValue {
    type Output = SurdValue;

    fn sub(self, o: &SurdValue) -> SurdValue {
        SurdValue::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
}

impl Neg for &SurdValue {
    type Output = SurdValue;

    fn neg(self) -> SurdValue {
        SurdValue::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Neg for SurdValue {
    type Output = SurdValue;

    fn neg(self) -> SurdValue {
        -&self
    }
}

/// Panics on division by zero.
impl<'a> Div<&'a SurdValue> for &'a SurdValue {
    type Output = SurdValue;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &SurdValue) -> SurdValue {
        self * &o.inverse().expect("division by zero surd")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<SurdValue> for SurdValue {
            type Output = SurdValue;
            fn $method(self, o: SurdValue) -> SurdValue {
                (&self).$method(&o)
            }
        }
        impl<'a> $tr<&'a SurdValue> for SurdValue {
            type Output = SurdValue;
            fn $method(self, o: &'a SurdValue) -> SurdValue {
                (&self).$method(o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Zero for SurdValue {
    fn zero() -> Self {
        SurdValue::from_ints(0, 0, 0, 0)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.is_rational()
    }
}

impl One for SurdValue {
    fn one() -> Self {
        SurdValue::from_ints(1, 0, 0, 0)
    }
}

impl Scalar for SurdValue {
    fn from_i64(value: i64) -> Self {
        SurdValue::from_ints(value, 0, 0, 0)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl ExactDiv for SurdValue {
    fn div_integer(&self, divisor: i64) -> Self {
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(divisor)))
    }
}

impl fmt::Display for SurdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(&self.a, ""), (&self.b, "√2"), (&self.c, "√3"), (&self.d, "√6")];
        let mut wrote = false;
        for (coef, unit) in terms {
            if coef.is_zero() {
                continue;
            }
            let magnitude = coef.abs();
            match (wrote, coef.is_negative()) {
                (false, true) => f.write_str("-")?,
                (true, true) => f.write_str(" - ")?,
                (true, false) => f.write_str(" + ")?,
                (false, false) => {}
            }
            if unit.is_empty() || !magnitude.is_one() {
                if magnitude.is_integer() {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
            }
            f.write_str(unit)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use proptest::prelude::*;

    fn s(a: i64, b: i64, c: i64, d: i64) -> SurdValue {
        SurdValue::from_ints(a, b, c, d)
    }

    #[test]
    fn products() {
        let u = s(0, 1, 1, 0);
        assert_eq!(&u * &u, s(5, 0, 0, 2));
        assert_eq!(&u * &s(0, -1, 1, 0), s(1, 0, 0, 0));
        assert_eq!(&u * &s(0, 1, -1, 0), s(-1, 0, 0, 0));
        assert_eq!(SurdValue::sqrt6() * SurdValue::sqrt6(), s(6, 0, 0, 0));
        assert_eq!(SurdValue::sqrt2() * SurdValue::sqrt6(), s(0, 0, 2, 0));
        assert_eq!(SurdValue::sqrt3() * SurdValue::sqrt6(), s(0, 3, 0, 0));
    }

    #[test]
    fn powers() {
        let u = s(0, 1, 1, 0);
        assert_eq!(u.pow(0), SurdValue::one());
        assert_eq!(u.pow(4), s(49, 0, 0, 20));
        let conj = s(0, 1, -1, 0);
        assert_eq!(u.pow(4) + conj.pow(4), s(98, 0, 0, 0));
    }

    #[test]
    fn display() {
        assert_eq!(s(49, 0, 0, 20).to_string(), "49 + 20√6");
        assert_eq!(s(0, -1, 1, 0).to_string(), "-√2 + √3");
        assert_eq!(SurdValue::zero().to_string(), "0");
        let half = SurdValue::new(ratio(1, 2), ratio(0, 1), ratio(0, 1), ratio(-3, 4));
        assert_eq!(half.to_string(), "(1/2) - (3/4)√6");
    }

    #[test]
    fn rational_and_integral() {
        assert!(s(3, 0, 0, 0).is_integral());
        assert!(!s(3, 0, 1, 0).is_rational());
        assert!(matches!(s(3, 0, 1, 0).to_integer(), Err(Error::IrrationalResidue(_))));
        let half = SurdValue::from_rational(ratio(1, 2));
        assert!(half.is_rational() && !half.is_integral());
        assert!(matches!(half.to_integer(), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(SurdValue::zero().inverse().is_none());
    }

    #[test]
    fn float_conversion() {
        let u = s(0, 1, 1, 0);
        assert!((u.to_f64() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-15);
    }

    fn arb_surd() -> impl Strategy<Value = SurdValue> {
        proptest::collection::vec((-20i64..=20, 1i64..=6), 4).prop_map(|v| {
            SurdValue::new(
                ratio(v[0].0, v[0].1),
                ratio(v[1].0, v[1].1),
                ratio(v[2].0, v[2].1),
                ratio(v[3].0, v[3].1),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_surd(), y in arb_surd(), z in arb_surd()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
        }

        #[test]
        fn inverse_round_trip(x in arb_surd()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inverse().unwrap(), SurdValue::one());
        }

        #[test]
        fn float_homomorphism(x in arb_surd(), y in arb_surd()) {
            let exact = (&x * &y).to_f64();
            let approx = x.to_f64() * y.to_f64();
            prop_assert!((exact - approx).abs() <= 1e-9 * (1.0 + approx.abs()));
        }
    }
}
