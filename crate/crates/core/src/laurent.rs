//! Laurent polynomials in `z` with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::ring::Ring;

/// `sum_e c_e z^e` over a contiguous exponent range `lo..=hi`.
///
/// Stored trimmed: the first and last stored coefficients are nonzero, and
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn monomial(c: BigInt, e: i64) -> Self {
        let mut p = LaurentPoly { lo: e, coeffs: vec![c] };
        p.trim();
        p
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn z_inv() -> Self {
        Self::monomial(BigInt::one(), -1)
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, BigInt)>>(pairs: I) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in pairs {
            p.add_assign_ref(&LaurentPoly::monomial(c, e));
        }
        p
    }

    /// Lowest exponent with a nonzero coefficient, `None` for zero.
    pub fn lo(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.lo)
    }

    pub fn hi(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.lo;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Value at `z = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Invariance under `z -> 1/z`.
    pub fn is_symmetric(&self) -> bool {
        match (self.lo(), self.hi()) {
            (Some(lo), Some(hi)) => lo == -hi && self.coeffs.iter().eq(self.coeffs.iter().rev()),
            _ => true,
        }
    }

    fn trim(&mut self) {
        let Some(first) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            self.coeffs.clear();
            self.lo = 0;
            return;
        };
        let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        self.coeffs.truncate(last + 1);
        self.coeffs.drain(..first);
        self.lo += first as i64;
    }

    /// Grows storage so that exponents `lo..=hi` are addressable.
    fn reserve_range(&mut self, lo: i64, hi: i64) {
        if self.coeffs.is_empty() {
            self.lo = lo;
            self.coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
            return;
        }
        if lo < self.lo {
            let extra = (self.lo - lo) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_with(BigInt::zero).take(extra));
            self.lo = lo;
        }
        let cur_hi = self.lo + self.coeffs.len() as i64 - 1;
        if hi > cur_hi {
            self.coeffs.resize((hi - self.lo + 1) as usize, BigInt::zero());
        }
    }

    fn accumulate(&mut self, rhs: &Self, negate: bool) {
        let (Some(lo), Some(hi)) = (rhs.lo(), rhs.hi()) else {
            return;
        };
        self.reserve_range(lo, hi);
        let off = (lo - self.lo) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + i] -= c;
            } else {
                self.coeffs[off + i] += c;
            }
        }
        self.trim();
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Ring for LaurentPoly {
    fn from_i64(v: i64) -> Self {
        LaurentPoly::monomial(BigInt::from(v), 0)
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        self.accumulate(rhs, false);
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.accumulate(rhs, true);
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::default();
        out.add_mul_assign(self, rhs);
        out
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Only monomials `+-z^e` are units.
    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && self.coeffs[0].abs().is_one() {
            Some(LaurentPoly { lo: -self.lo, coeffs: self.coeffs.clone() })
        } else {
            None
        }
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return;
        }
        let lo = a.lo + b.lo;
        let hi = lo + (a.coeffs.len() + b.coeffs.len() - 2) as i64;
        self.reserve_range(lo, hi);
        let off = (lo - self.lo) as usize;
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                if y.is_one() {
                    self.coeffs[off + i + j] += x;
                } else {
                    self.coeffs[off + i + j] += x * y;
                }
            }
        }
        self.trim();
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*z^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn arithmetic_trims() {
        let a = lp(&[(-1, 1), (0, 2), (1, 1)]);
        let b = lp(&[(-1, -1), (1, -1)]);
        let s = a.mul_ref(&LaurentPoly::one());
        assert_eq!(s, a);
        let mut t = a.clone();
        t.add_assign_ref(&b);
        assert_eq!(t, lp(&[(0, 2)]));
        assert_eq!(t.lo(), Some(0));
        t.sub_assign_ref(&lp(&[(0, 2)]));
        assert!(t.is_zero());
    }

    #[test]
    fn products_and_symmetry() {
        // (z + 1/z)^2 = z^2 + 2 + z^-2
        let a = lp(&[(-1, 1), (1, 1)]);
        let sq = a.mul_ref(&a);
        assert_eq!(sq, lp(&[(-2, 1), (0, 2), (2, 1)]));
        assert!(sq.is_symmetric());
        assert!(!lp(&[(1, 1)]).is_symmetric());
        assert_eq!(sq.eval_at_one(), BigInt::from(4));
        assert_eq!(sq.coeff(0), BigInt::from(2));
        assert_eq!(sq.coeff(7), BigInt::zero());
    }

    #[test]
    fn only_signed_monomials_invert() {
        assert_eq!(LaurentPoly::z().inverse(), Some(LaurentPoly::z_inv()));
        assert_eq!(lp(&[(3, -1)]).inverse(), Some(lp(&[(-3, -1)])));
        assert_eq!(lp(&[(0, 2)]).inverse(), None);
        assert_eq!(lp(&[(0, 1), (1, 1)]).inverse(), None);
    }
}
