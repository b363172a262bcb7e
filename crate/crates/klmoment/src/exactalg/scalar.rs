//! Coefficient scalars for exact cyclotomic arithmetic.
//!
//! Cyclotomic elements are generic over the coefficient type. Machine
//! integers (`i64`, `i128`) give fast paths whose arithmetic is checked, and
//! `BigInt` / `BigRational` never overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{
    CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Signed, ToPrimitive, Zero,
};
use std::fmt::Debug;
use std::hash::Hash;

/// Arithmetic overflow in a fixed-width coefficient type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("coefficient overflow in fixed-width arithmetic")]
pub struct Overflow;

/// A commutative coefficient ring usable inside [`CycElem`](super::CycElem).
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    /// True when the value is a rational integer.
    fn is_integer(&self) -> bool;

    /// Exact quotient `self / d`, or `None` when it leaves the type.
    fn div_exact(&self, d: i64) -> Option<Self>;

    /// Lossless conversion to an exact rational.
    fn to_rational(&self) -> BigRational;

    /// Nearest `f64`, used only for numeric embeddings.
    fn to_f64_lossy(&self) -> f64;

    /// Checked negation.
    fn checked_neg_s(&self) -> Result<Self, Overflow> {
        Self::zero().checked_sub(self).ok_or(Overflow)
    }

    /// Checked addition as a `Result`.
    fn add_s(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_add(o).ok_or(Overflow)
    }

    /// Checked subtraction as a `Result`.
    fn sub_s(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_sub(o).ok_or(Overflow)
    }

    /// Checked multiplication as a `Result`.
    fn mul_s(&self, o: &Self) -> Result<Self, Overflow> {
        self.checked_mul(o).ok_or(Overflow)
    }

    /// Conversion from an `i64`, failing only for types too narrow to hold it.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type holds i64 values")
    }
}

macro_rules! machine_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn is_integer(&self) -> bool {
                true
            }
            fn div_exact(&self, d: i64) -> Option<Self> {
                let d = <$t>::from(d);
                if d == 0 || self % d != 0 {
                    None
                } else {
                    Some(self / d)
                }
            }
            fn to_rational(&self) -> BigRational {
                BigRational::from_integer(BigInt::from(*self))
            }
            fn to_f64_lossy(&self) -> f64 {
                *self as f64
            }
        }
    };
}

machine_scalar!(i64);
machine_scalar!(i128);

impl Scalar for BigInt {
    fn is_integer(&self) -> bool {
        true
    }
    fn div_exact(&self, d: i64) -> Option<Self> {
        if d == 0 {
            return None;
        }
        let (q, r) = self.div_rem(&BigInt::from(d));
        r.is_zero().then_some(q)
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(if self.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        })
    }
}

impl Scalar for BigRational {
    fn is_integer(&self) -> bool {
        self.is_integer()
    }
    fn div_exact(&self, d: i64) -> Option<Self> {
        (d != 0).then(|| self / BigRational::from_integer(BigInt::from(d)))
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Conversion between coefficient types, used to move a value from a fast
/// fixed-width representation to an arbitrary-precision one and back.
pub trait ScalarInto<U> {
    /// Converts, failing when the target cannot hold the value.
    fn scalar_into(&self) -> Result<U, Overflow>;
}

impl ScalarInto<BigInt> for i64 {
    fn scalar_into(&self) -> Result<BigInt, Overflow> {
        Ok(BigInt::from(*self))
    }
}
impl ScalarInto<BigInt> for i128 {
    fn scalar_into(&self) -> Result<BigInt, Overflow> {
        Ok(BigInt::from(*self))
    }
}
impl ScalarInto<BigInt> for BigInt {
    fn scalar_into(&self) -> Result<BigInt, Overflow> {
        Ok(self.clone())
    }
}
impl ScalarInto<i128> for BigInt {
    fn scalar_into(&self) -> Result<i128, Overflow> {
        self.to_i128().ok_or(Overflow)
    }
}
impl ScalarInto<i64> for BigInt {
    fn scalar_into(&self) -> Result<i64, Overflow> {
        self.to_i64().ok_or(Overflow)
    }
}
impl ScalarInto<i128> for i64 {
    fn scalar_into(&self) -> Result<i128, Overflow> {
        Ok(i128::from(*self))
    }
}
impl ScalarInto<BigRational> for BigInt {
    fn scalar_into(&self) -> Result<BigRational, Overflow> {
        Ok(BigRational::from_integer(self.clone()))
    }
}
impl ScalarInto<BigRational> for i64 {
    fn scalar_into(&self) -> Result<BigRational, Overflow> {
        Ok(BigRational::from_integer(BigInt::from(*self)))
    }
}
impl ScalarInto<BigRational> for BigRational {
    fn scalar_into(&self) -> Result<BigRational, Overflow> {
        Ok(self.clone())
    }
}
