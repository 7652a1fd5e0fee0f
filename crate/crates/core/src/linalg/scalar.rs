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

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Ring element usable as a matrix entry.
///
/// Arithmetic goes through references so that arbitrary-precision
/// scalars are not cloned on every operation.
pub trait Scalar: Clone + PartialEq + Debug + Zero + One + Send + Sync {
    fn from_i64(value: i64) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Scalars that support division by a nonzero integer whenever the
/// quotient is known to lie in the ring.
///
/// For fields of characteristic zero this is ordinary division. For
/// integers the caller guarantees divisibility; a remainder is a logic
/// error and panics.
pub trait ExactDiv: Scalar {
    fn div_integer(&self, divisor: i64) -> Self;
}

macro_rules! ref_scalar {
    ($t:ty, $from:expr) => {
        impl Scalar for $t {
            fn from_i64(value: i64) -> Self {
                $from(value)
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
    };
}

ref_scalar!(i64, |v| v);
ref_scalar!(f64, |v| v as f64);
ref_scalar!(BigInt, BigInt::from);
ref_scalar!(BigRational, |v| BigRational::from_integer(BigInt::from(v)));

impl ExactDiv for f64 {
    fn div_integer(&self, divisor: i64) -> Self {
        self / divisor as f64
    }
}

impl ExactDiv for BigRational {
    fn div_integer(&self, divisor: i64) -> Self {
        self / BigRational::from_integer(BigInt::from(divisor))
    }
}

impl ExactDiv for BigInt {
    fn div_integer(&self, divisor: i64) -> Self {
        let (q, r) = self.div_rem(&BigInt::from(divisor));
        assert!(r.is_zero(), "{self} is not divisible by {divisor}");
        q
    }
}

/// Exact rational from a pair of machine integers.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rational(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

