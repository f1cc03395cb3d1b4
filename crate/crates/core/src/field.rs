//! Scalar fields the library can compute over.
//!
//! Every axiom check compares two coordinate vectors for equality, so only
//! exact fields implement [`Field`]. Floating point types are deliberately
//! absent.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Num;

/// An exact field of characteristic zero.
pub trait Field: Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    /// The rational number `numer / denom`.
    ///
    /// Panics if `denom` is zero.
    fn ratio(numer: i64, denom: i64) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Field for BigRational {
    fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }
}

macro_rules! small_ratio_field {
    ($($int:ty),*) => {$(
        impl Field for Ratio<$int> {
            fn ratio(numer: i64, denom: i64) -> Self {
                assert!(denom != 0, "zero denominator");
                Ratio::new(numer as $int, denom as $int)
            }
        }
    )*};
}

small_ratio_field!(i64, i128);
