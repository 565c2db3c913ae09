//! The coefficient-ring contract used by [`Series`](crate::series::Series).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// A commutative ring with a partial inverse.
///
/// `inverse` returns `None` for non-units. Implementations only need to
/// recognise the units that actually occur as constant terms of inverted
/// series.
pub trait Ring: Zero + One + Clone + PartialEq + Debug + Send + Sync {
    fn from_i64(v: i64) -> Self;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn sub_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inverse(&self) -> Option<Self>;

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }
}

/// Lossless conversion into the rational field, used when reporting values.
pub trait ToRational {
    fn to_rational(&self) -> Rational;
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += a * b;
    }
}

impl ToRational for BigInt {
    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }
}

impl Ring for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += a * b;
    }
}

impl ToRational for Rational {
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}
