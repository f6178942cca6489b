//! Numeric traits the algebra is generic over.
//!
//! Coefficients of Laurent polynomials (and everything built on them) range
//! over a [`Coefficient`] ring: `i64`, `i128` or [`num_bigint::BigInt`]. All
//! arithmetic is overflow-checked, so a fixed-width coefficient type either
//! produces the exact answer or panics.
//!
//! Points acted on by affine Weyl group elements range over a [`Scalar`]
//! field such as `Rational64`, `BigRational` or `f64`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_bigint::ToBigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Num, Signed, ToPrimitive};

/// An exact integer coefficient ring.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Send
    + Sync
    + 'static
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + ToBigInt
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("coefficient type cannot hold an i64")
    }

    fn add_exact(&self, other: &Self) -> Self {
        self.checked_add(other).expect("coefficient overflow in addition")
    }

    fn sub_exact(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("coefficient overflow in subtraction")
    }

    fn mul_exact(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("coefficient overflow in multiplication")
    }
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + Eq
        + Ord
        + Hash
        + Send
        + Sync
        + 'static
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + ToBigInt
{
}

/// A field of coordinates for the affine action.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + Debug + PartialOrd + Num + Neg<Output = T> + FromPrimitive {}

pub(crate) fn scalar_from_i64<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent an integer coordinate")
}
