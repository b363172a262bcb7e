//! A minimal commutative-ring interface shared by the symmetric-function
//! engine, so the same determinant code runs over cyclotomic integers,
//! plain integers and polynomial rings.

use super::cyclo::CycElem;
use super::scalar::{Overflow, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// Commutative ring operations with checked arithmetic. `zero_like` and
/// `one_like` build constants in the same ring as `self` (for example with
/// the same cyclotomic conductor).
pub trait RingElem: Clone + PartialEq + Debug + Send + Sync {
    /// Additive identity of the ring containing `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity of the ring containing `self`.
    fn one_like(&self) -> Self;
    /// True for the additive identity.
    fn is_zero_elem(&self) -> bool;
    /// Checked sum.
    fn r_add(&self, o: &Self) -> Result<Self, Overflow>;
    /// Checked difference.
    fn r_sub(&self, o: &Self) -> Result<Self, Overflow>;
    /// Checked product.
    fn r_mul(&self, o: &Self) -> Result<Self, Overflow>;
    /// Checked product with an integer.
    fn r_scale(&self, k: i64) -> Result<Self, Overflow>;
}

impl<T: Scalar> RingElem for CycElem<T> {
    fn zero_like(&self) -> Self {
        CycElem::zero(self.conductor())
    }
    fn one_like(&self) -> Self {
        CycElem::one(self.conductor())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Result<Self, Overflow> {
        self.try_add(o)
    }
    fn r_sub(&self, o: &Self) -> Result<Self, Overflow> {
        self.try_sub(o)
    }
    fn r_mul(&self, o: &Self) -> Result<Self, Overflow> {
        self.try_mul(o)
    }
    fn r_scale(&self, k: i64) -> Result<Self, Overflow> {
        self.try_scale(&T::from_int(k))
    }
}

impl RingElem for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self + o)
    }
    fn r_sub(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self - o)
    }
    fn r_mul(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(self * o)
    }
    fn r_scale(&self, k: i64) -> Result<Self, Overflow> {
        Ok(self * k)
    }
}
