//! Rank and crank distributions from their two-variable generating
//! functions, with power moments and binomial (symmetrized) moments.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qseries::{euler_p, infinite_pochhammer};
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::Series;
use crate::Variant;

/// Row `n` holds `sum_m count(m, n) z^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct StatTable {
    rows: Vec<LaurentPoly>,
}

impl StatTable {
    pub fn from_rows(rows: Vec<LaurentPoly>) -> Self {
        assert!(!rows.is_empty(), "a table has at least the n = 0 row");
        StatTable { rows }
    }

    pub fn upto(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Result<&LaurentPoly> {
        self.rows.get(n).ok_or(Error::OutOfRange { n, upto: self.upto() })
    }

    pub fn rows(&self) -> &[LaurentPoly] {
        &self.rows
    }

    pub fn count(&self, m: i64, n: usize) -> Result<BigInt> {
        Ok(self.row(n)?.coeff(m))
    }

    /// `sum_m m^k count(m, n)`.
    pub fn moment(&self, k: u32, n: usize) -> Result<Rational> {
        let row = self.row(n)?;
        let total: BigInt = row.terms().map(|(m, c)| BigInt::from(m).pow(k) * c).sum();
        Ok(Rational::from_integer(total))
    }

    /// `sum_m binom(m + floor((k-1)/2), k) count(m, n)`.
    pub fn symmetrized_moment(&self, k: u32, n: usize) -> Result<Rational> {
        let row = self.row(n)?;
        let shift = (k as i64 - 1).div_euclid(2);
        let mut total = Rational::zero();
        for (m, c) in row.terms() {
            total += generalized_binomial(m + shift, k) * Rational::from_integer(c.clone());
        }
        Ok(total)
    }

    /// `sum_{n>=0} moment(k, n) q^n` over the whole table.
    pub fn moment_series(&self, k: u32) -> Series<Rational> {
        Series::from_fn(self.upto(), |n| self.moment(k, n).expect("row in range"))
    }
}

/// `N(m, n)` from `sum_{n>=0} q^{n^2} / ((zq; q)_n (q/z; q)_n)`.
pub fn rank_table(upto: usize) -> StatTable {
    let z = LaurentPoly::z();
    let zi = LaurentPoly::z_inv();
    let mut total: Series<LaurentPoly> = Series::zero(upto);
    let mut n = 0;
    while n * n <= upto {
        let mut term = Series::monomial(LaurentPoly::one(), n * n, upto);
        for k in 1..=n {
            term.div_one_minus(&z, k);
            term.div_one_minus(&zi, k);
        }
        total.add_assign(&term);
        n += 1;
    }
    StatTable::from_rows(total.into_coeffs())
}

/// `M(m, n)` from `(q; q)_inf / ((zq; q)_inf (q/z; q)_inf)`.
///
/// Row 1 is `z - 1 + 1/z`: the generating function disagrees with the
/// combinatorial crank of the single partition of 1.
pub fn crank_table(upto: usize) -> StatTable {
    let z = LaurentPoly::z();
    let zi = LaurentPoly::z_inv();
    let mut s: Series<LaurentPoly> =
        infinite_pochhammer::<BigInt>(1, upto).map(|c| LaurentPoly::monomial(c.clone(), 0));
    for k in 1..=upto {
        s.div_one_minus(&z, k);
        s.div_one_minus(&zi, k);
    }
    StatTable::from_rows(s.into_coeffs())
}

/// `N_k(n)`.
pub fn rank_moment(k: u32, n: usize, table: &StatTable) -> Result<Rational> {
    table.moment(k, n)
}

/// `M_k(n)`, the coefficient of `q^n` in `C_k`.
pub fn crank_moment(k: u32, n: usize, table: &StatTable) -> Result<Rational> {
    table.moment(k, n)
}

/// `x (x-1) ... (x-k+1) / k!`, defined for negative `x` as well.
pub fn generalized_binomial(x: i64, k: u32) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= x - i;
        den *= i + 1;
    }
    Rational::new(num, den)
}

/// Symmetrized rank moment `eta_k(n)`.
pub fn eta_k(k: u32, n: usize, rank: &StatTable) -> Result<Rational> {
    rank.symmetrized_moment(k, n)
}

/// Symmetrized crank moment `mu_k(n)`.
pub fn mu_k(k: u32, n: usize, crank: &StatTable) -> Result<Rational> {
    crank.symmetrized_moment(k, n)
}

/// The bilateral series
/// `(1/(q;q)_inf) sum_{n != 0} eps(n) q^{n(3n+1)/2 + kn} / (1 - q^n)^{2k}`
/// with `eps(n) = (-1)^n` (`Printed`) or `(-1)^{n-1}` (`Corrected`).
///
/// The corrected sign generates `eta_{2k}(n)`; the printed sign generates
/// its negative.
pub fn eta2k_gf<R: Ring>(k: usize, order: usize, variant: Variant) -> Series<R> {
    assert!(k >= 1, "eta2k_gf needs k >= 1");
    let mut sum: Series<R> = Series::zero(order);
    let mut m = 1usize;
    loop {
        // n = m contributes q^{m(3m+1)/2 + km}; n = -m, after
        // 1/(1 - q^{-m})^{2k} = q^{2km}/(1 - q^m)^{2k}, contributes q^{m(3m-1)/2 + km}.
        let low = m * (3 * m - 1) / 2 + k * m;
        if low > order {
            break;
        }
        let high = m * (3 * m + 1) / 2 + k * m;
        let printed_sign = if m.is_multiple_of(2) { 1 } else { -1 };
        let sign = match variant {
            Variant::Printed => printed_sign,
            Variant::Corrected => -printed_sign,
        };
        let mut term = Series::monomial(R::from_i64(sign), low, order);
        if high <= order {
            term.set_coeff(high, R::from_i64(sign));
        }
        for _ in 0..2 * k {
            term.div_one_minus_q(m);
        }
        sum.add_assign(&term);
        m += 1;
    }
    euler_p::<R>(order).mul(&sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn row(t: &StatTable, n: usize) -> Vec<(i64, i64)> {
        t.row(n).unwrap().terms().map(|(m, c)| (m, i64::try_from(c).unwrap())).collect()
    }

    #[test]
    fn small_rank_rows() {
        let t = rank_table(6);
        assert_eq!(row(&t, 0), vec![(0, 1)]);
        assert_eq!(row(&t, 2), vec![(-1, 1), (1, 1)]);
        assert_eq!(row(&t, 3), vec![(-2, 1), (0, 1), (2, 1)]);
    }

    #[test]
    fn small_crank_rows() {
        let t = crank_table(6);
        assert_eq!(row(&t, 0), vec![(0, 1)]);
        assert_eq!(row(&t, 1), vec![(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(row(&t, 4), vec![(-4, 1), (-2, 1), (0, 1), (2, 1), (4, 1)]);
    }

    #[test]
    fn moments() {
        let r = rank_table(5);
        let c = crank_table(5);
        assert_eq!(rank_moment(2, 3, &r).unwrap(), int(8));
        assert_eq!(rank_moment(4, 3, &r).unwrap(), int(32));
        assert_eq!(rank_moment(2, 0, &r).unwrap(), int(0));
        assert_eq!(crank_moment(4, 1, &c).unwrap(), int(2));
        assert_eq!(crank_moment(4, 2, &c).unwrap(), int(32));
        assert_eq!(crank_moment(4, 3, &c).unwrap(), int(162));
        assert_eq!(rank_moment(2, 6, &r), Err(Error::OutOfRange { n: 6, upto: 5 }));
    }

    #[test]
    fn binomials() {
        assert_eq!(generalized_binomial(-1, 4), int(1));
        assert_eq!(generalized_binomial(-2, 4), int(5));
        assert_eq!(generalized_binomial(3, 4), int(0));
        assert_eq!(generalized_binomial(7, 0), int(1));
        assert_eq!(generalized_binomial(6, 3), int(20));
    }

    #[test]
    fn symmetrized_moments() {
        let r = rank_table(6);
        let c = crank_table(6);
        assert_eq!(eta_k(4, 3, &r).unwrap(), int(1));
        assert_eq!(eta_k(4, 4, &r).unwrap(), int(6));
        assert_eq!(eta_k(4, 1, &r).unwrap(), int(0));
        assert_eq!(mu_k(2, 1, &c).unwrap(), int(1));
        assert_eq!(mu_k(4, 0, &c).unwrap(), int(0));
    }

    #[test]
    fn eta_generating_function_signs() {
        let corrected: Series<Rational> = eta2k_gf(2, 10, Variant::Corrected);
        let printed: Series<Rational> = eta2k_gf(2, 10, Variant::Printed);
        assert_eq!(corrected.coeff(3), &int(1));
        assert_eq!(corrected.coeff(4), &int(6));
        assert_eq!(printed.coeff(3), &int(-1));
        for v in [Variant::Printed, Variant::Corrected] {
            for k in 1..=2 {
                let s: Series<Rational> = eta2k_gf(k, 10, v);
                assert!(Zero::is_zero(s.coeff(0)) && Zero::is_zero(s.coeff(1)));
            }
        }
    }
}
