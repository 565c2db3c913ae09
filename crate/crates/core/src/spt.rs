//! Generating functions for smallest-parts statistics and the two forms of
//! the double series they sum to.

use crate::qseries::smallest_part_weight;
use crate::ring::Ring;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SptKind {
    /// Smallest part equal to `j`.
    Spt,
    /// Every part within `j` of the smallest.
    SptStar,
    /// Product of the two.
    SptPlus,
}

/// One member of an spt family, tagged with how it was built.
#[derive(Clone, Debug)]
pub struct SptFamily<R> {
    pub j: usize,
    pub kind: SptKind,
    pub series: Series<R>,
}

impl<R: Ring> SptFamily<R> {
    pub fn build(kind: SptKind, j: usize, order: usize) -> Self {
        let series = match kind {
            SptKind::Spt => spt_j_series(j, order),
            SptKind::SptStar => spt_j_star_series(j, order),
            SptKind::SptPlus => spt_j_plus_series(j, order),
        };
        SptFamily { j, kind, series }
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

/// `q^j / ((1 - q^j)^2 (q^{j+1}; q)_inf)`.
pub fn spt_j_series<R: Ring>(j: usize, order: usize) -> Series<R> {
    let mut s = smallest_part_weight(j, order);
    for k in j + 1..=order {
        s.div_one_minus_q(k);
    }
    s
}

/// `sum_{s>=1} (q^s + 2q^{2s} + ...) / ((1 - q^{s+1}) ... (1 - q^{s+j}))`.
pub fn spt_j_star_series<R: Ring>(j: usize, order: usize) -> Series<R> {
    assert!(j >= 1);
    let mut total = Series::zero(order);
    for s in 1..=order {
        let mut term = smallest_part_weight(s, order);
        for i in 1..=j {
            if s + i > order {
                break;
            }
            term.div_one_minus_q(s + i);
        }
        total.add_assign(&term);
    }
    total
}

/// `spt_j^+(n) = sum_{k<=n} spt_j^*(k) spt_j(n - k)`.
pub fn spt_j_plus_series<R: Ring>(j: usize, order: usize) -> Series<R> {
    spt_j_series::<R>(j, order).mul(&spt_j_star_series(j, order))
}

/// `sum_{j>=1} spt_j^+`, the first form of the double series.
///
/// `spt_j^+` starts at `q^{j+1}`, so `j <= order - 1` suffices. The `spt_j^*`
/// factors for all `j` are produced in a single sweep over `s`, each `s`
/// contributing its running product `W_s / (q^{s+1}; q)_j` to every `j`.
pub fn spt_plus_series<R: Ring>(order: usize) -> Series<R> {
    spt_plus_with_cutoff(order, order.saturating_sub(1))
}

pub(crate) fn spt_plus_with_cutoff<R: Ring>(order: usize, max_j: usize) -> Series<R> {
    let mut stars: Vec<Series<R>> = (0..=max_j).map(|_| Series::zero(order)).collect();
    for s in 1..=order {
        let mut term = smallest_part_weight::<R>(s, order);
        for (j, star) in stars.iter_mut().enumerate().skip(1) {
            if s + j <= order {
                term.div_one_minus_q(s + j);
            }
            // spt_j has minimum degree j, so only q^0..q^{order-j} of spt_j^* matter
            for (acc, c) in star.coeffs_mut()[..=order - j.min(order)].iter_mut().zip(term.coeffs()) {
                if !c.is_zero() {
                    acc.add_assign_ref(c);
                }
            }
        }
    }
    let mut total = Series::zero(order);
    for (j, star) in stars.iter().enumerate().skip(1) {
        total.add_assign(&spt_j_series::<R>(j, order).mul(star));
    }
    total
}

/// `(1/(q;q)_inf) sum_{n1,n2>=1} (q)_{n1-1}^2 (q)_{n2-1}^2 q^{n1+n2}
///  / ((q)_{n1} (q)_{n2} (q)_{n1+n2})`, the rearranged first form.
///
/// Terms with `n1 + n2 > order` vanish. Splitting
/// `1/(q)_{n1+n2} = 1/(q)_{n1} * 1/(q^{n1+1}; q)_{n2}` turns the `n1` factor into
/// `q^{n1}/(1-q^{n1})^2` and lets the `n2` sum be evaluated by Horner's rule.
pub fn theorem1_lhs_rearranged<R: Ring>(order: usize) -> Series<R> {
    rearranged_with_cutoff(order, order)
}

pub(crate) fn rearranged_with_cutoff<R: Ring>(order: usize, cutoff: usize) -> Series<R> {
    // h[k] = q^k (q)_{k-1} / (1 - q^k) = q^k (q)_{k-1}^2 / (q)_k
    let mut h: Vec<Series<R>> = Vec::with_capacity(cutoff + 1);
    h.push(Series::zero(order));
    let mut poch = Series::<R>::one(order);
    for k in 1..=cutoff {
        if k > 1 && k - 1 <= order {
            poch.mul_one_minus_q(k - 1);
        }
        let mut t = poch.shift(k);
        if k <= order {
            t.div_one_minus_q(k);
        }
        h.push(t);
    }
    let mut outer = Series::zero(order);
    for n1 in 1..cutoff {
        let mut inner = Series::<R>::zero(order);
        for n2 in (1..=cutoff - n1).rev() {
            inner.add_assign(&h[n2]);
            if n1 + n2 <= order {
                inner.div_one_minus_q(n1 + n2);
            }
        }
        outer.add_assign(&smallest_part_weight::<R>(n1, order).mul(&inner));
    }
    crate::qseries::euler_p::<R>(order).mul(&outer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(s: &Series<BigInt>) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn spt_j_values() {
        assert_eq!(&ints(&spt_j_series(1, 3))[1..], &[1, 2, 4]);
        assert_eq!(ints(&spt_j_series(2, 5))[3], 0);
        for j in 1..6 {
            let s: Series<BigInt> = spt_j_series(j, 8);
            assert_eq!(s.min_degree(), Some(j));
            assert_eq!(s.coeff(j), &BigInt::from(1));
        }
    }

    #[test]
    fn spt_j_star_values() {
        assert_eq!(&ints(&spt_j_star_series(1, 3))[1..], &[1, 3, 5]);
        assert_eq!(ints(&spt_j_star_series(2, 4))[2], 3);
        for j in 1..6 {
            assert_eq!(ints(&spt_j_star_series(j, 4))[1], 1);
        }
    }

    #[test]
    fn spt_j_plus_values() {
        assert_eq!(ints(&spt_j_plus_series(1, 5))[3], 5);
        assert_eq!(ints(&spt_j_plus_series(2, 6))[4], 3);
        for j in 1..5 {
            let s: Series<BigInt> = spt_j_plus_series(j, 10);
            assert_eq!(s.min_degree(), Some(j + 1));
        }
    }

    #[test]
    fn spt_plus_small_coefficients() {
        let s: Series<BigInt> = spt_plus_series(6);
        assert_eq!(&ints(&s)[..5], &[0, 0, 1, 6, 19]);
    }

    #[test]
    fn sweep_matches_per_j_products() {
        let order = 25;
        let mut direct = Series::<BigInt>::zero(order);
        for j in 1..order {
            direct.add_assign(&spt_j_plus_series(j, order));
        }
        assert_eq!(spt_plus_series::<BigInt>(order), direct);
    }

    #[test]
    fn rearranged_form_small_coefficients() {
        let s: Series<BigInt> = theorem1_lhs_rearranged(6);
        assert_eq!(&ints(&s)[..5], &[0, 0, 1, 6, 19]);
    }

    #[test]
    fn larger_cutoffs_change_nothing() {
        let order = 20;
        assert_eq!(
            spt_plus_with_cutoff::<BigInt>(order, order - 1),
            spt_plus_with_cutoff::<BigInt>(order, order + 6)
        );
        assert_eq!(
            rearranged_with_cutoff::<BigInt>(order, order),
            rearranged_with_cutoff::<BigInt>(order, order + 6)
        );
    }
}
