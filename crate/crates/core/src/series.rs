//! Truncated formal power series in `q`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{Ring, ToRational};

/// A power series known exactly for the exponents `0..=order`.
///
/// Binary operations yield the smaller of the two orders, and equality
/// compares coefficients up to the common order.
#[derive(Clone, Debug)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * q^k`; zero when `k > order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from `coeffs[0..=order]`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the q^0 coefficient");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics when `n > order`.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [R] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        self.coeffs[n] = c;
    }

    /// Lowers the order; a larger `order` leaves the series unchanged.
    pub fn truncated(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0].inverse().is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series::from_fn(n, |i| {
            let mut c = self.coeffs[i].clone();
            c.add_assign_ref(&other.coeffs[i]);
            c
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series::from_fn(n, |i| {
            let mut c = self.coeffs[i].clone();
            c.sub_assign_ref(&other.coeffs[i]);
            c
        })
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(Ring::neg_ref).collect() }
    }

    /// In-place `self += other`, truncating `self` to the common order.
    pub fn add_assign(&mut self, other: &Self) {
        self.coeffs.truncate(other.coeffs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        self.coeffs.truncate(other.coeffs.len());
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign_ref(b);
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect() }
    }

    /// Cauchy product truncated to the common order. Zero coefficients of
    /// `self` are skipped, so put the sparser factor on the left.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Series::<R>::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out.coeffs[i + j].add_mul_assign(a, b);
            }
        }
        out
    }

    /// Multiplicative inverse; fails when the constant term is not a unit.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NotUnit)?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                acc.add_mul_assign(&self.coeffs[k], &out[m - k]);
            }
            out.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplication by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        Series::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// In place: `self *= (1 - c q^k)`.
    pub fn mul_one_minus(&mut self, c: &R, k: usize) {
        let n = self.order();
        if k > n {
            return;
        }
        if k == 0 {
            let f = {
                let mut f = R::one();
                f.sub_assign_ref(c);
                f
            };
            for a in &mut self.coeffs {
                *a = a.mul_ref(&f);
            }
            return;
        }
        for m in (k..=n).rev() {
            let t = self.coeffs[m - k].mul_ref(c);
            self.coeffs[m].sub_assign_ref(&t);
        }
    }

    /// In place: `self /= (1 - c q^k)` for `k >= 1`.
    pub fn div_one_minus(&mut self, c: &R, k: usize) {
        assert!(k >= 1, "division by a constant factor needs invert()");
        let n = self.order();
        for m in k..=n {
            let (lo, hi) = self.coeffs.split_at_mut(m);
            if lo[m - k].is_zero() {
                continue;
            }
            hi[0].add_mul_assign(&lo[m - k], c);
        }
    }

    /// `self /= (1 - q^k)` for `k >= 1`; the common case of `div_one_minus`.
    pub fn div_one_minus_q(&mut self, k: usize) {
        assert!(k >= 1);
        let n = self.order();
        for m in k..=n {
            let (lo, hi) = self.coeffs.split_at_mut(m);
            if lo[m - k].is_zero() {
                continue;
            }
            hi[0].add_assign_ref(&lo[m - k]);
        }
    }

    /// `self *= (1 - q^k)` for `k >= 1`.
    pub fn mul_one_minus_q(&mut self, k: usize) {
        assert!(k >= 1);
        let n = self.order();
        if k > n {
            return;
        }
        for m in (k..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(m);
            if lo[m - k].is_zero() {
                continue;
            }
            hi[0].sub_assign_ref(&lo[m - k]);
        }
    }

    /// The operator `q d/dq`: the coefficient of `q^n` is multiplied by `n`.
    pub fn delta_q(&self) -> Self {
        Series::from_fn(self.order(), |n| self.coeffs[n].mul_ref(&R::from_i64(n as i64)))
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: Ring + ToRational> Series<R> {
    pub fn to_rational(&self) -> Series<Rational> {
        self.map(ToRational::to_rational)
    }
}

impl<R: Ring> PartialEq for Series<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl<R: Ring> Add for &Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: Self) -> Series<R> {
        Series::add(self, rhs)
    }
}

impl<R: Ring> Sub for &Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: Self) -> Series<R> {
        Series::sub(self, rhs)
    }
}

impl<R: Ring> Mul for &Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: Self) -> Series<R> {
        Series::mul(self, rhs)
    }
}

impl<R: Ring> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series::neg(self)
    }
}
