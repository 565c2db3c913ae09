//! The two-fold Bailey pair supported on the diagonal, its defining
//! relation, the two-fold lemma at constant parameters, and the identities
//! obtained from it.
//!
//! All parameters `a`, `a_1`, `a_2` are fixed at 1, so every Pochhammer
//! symbol in the kernel is `(q; q)_n`.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qseries::{
    euler_p, lambert_phi, reciprocal_pochhammer, scaled_infinite_pochhammer, scaled_pochhammer,
};
use crate::rational::{self, Rational};
use crate::report::{earliest, first_difference, FirstFailure, VerificationReport};
use crate::ring::Ring;
use crate::series::Series;
use crate::spt::{spt_plus_series, theorem1_lhs_rearranged};

/// `alpha_{n1,n2}`: `(-1)^n q^{n(3n-1)/2} (1 + q^n)` on the diagonal
/// `n1 = n2 = n >= 1`, `1` at `(0, 0)`, zero elsewhere.
pub fn pair_alpha<R: Ring>(n1: usize, n2: usize, order: usize) -> Series<R> {
    if n1 != n2 {
        return Series::zero(order);
    }
    let n = n1;
    if n == 0 {
        return Series::one(order);
    }
    let sign = R::from_i64(if n.is_multiple_of(2) { 1 } else { -1 });
    let mut s = Series::monomial(sign.clone(), n * (3 * n - 1) / 2, order);
    let hi = n * (3 * n + 1) / 2;
    if hi <= order {
        s.set_coeff(hi, sign);
    }
    s
}

/// `beta_{n1,n2} = 1 / ((q)_{n1} (q)_{n2} (q)_{n1+n2})`.
pub fn pair_beta<R: Ring>(n1: usize, n2: usize, order: usize) -> Series<R> {
    let mut s = reciprocal_pochhammer(1, n1, order);
    for k in 1..=n2.min(order) {
        s.div_one_minus_q(k);
    }
    for k in 1..=(n1 + n2).min(order) {
        s.div_one_minus_q(k);
    }
    s
}

/// Checks `beta = sum_{r1<=n1, r2<=n2} alpha_{r1,r2} / ((q)_{n1+r1} (q)_{n1-r1} (q)_{n2+r2} (q)_{n2-r2})`
/// for every cell `n1, n2 <= bound`.
pub fn verify_pair(bound: usize, order: usize) -> VerificationReport {
    let started = Instant::now();
    let recip: Vec<Series<BigInt>> =
        (0..=2 * bound).map(|m| reciprocal_pochhammer(1, m, order)).collect();
    // kernel[n][r] = 1 / ((q)_{n+r} (q)_{n-r})
    let kernel: Vec<Vec<Series<BigInt>>> = (0..=bound)
        .map(|n| (0..=n).map(|r| recip[n + r].mul(&recip[n - r])).collect())
        .collect();
    let cells: Vec<(usize, usize)> =
        (0..=bound).flat_map(|a| (0..=bound).map(move |b| (a, b))).collect();
    let failures: Vec<((usize, usize), FirstFailure)> = cells
        .par_iter()
        .filter_map(|&(n1, n2)| {
            let beta: Series<BigInt> = pair_beta(n1, n2, order);
            let mut sum = Series::zero(order);
            // alpha is diagonal, so only r1 = r2 = r survives
            for r in 0..=n1.min(n2) {
                let alpha: Series<BigInt> = pair_alpha(r, r, order);
                if alpha.is_zero() {
                    continue;
                }
                sum.add_assign(&alpha.mul(&kernel[n1][r]).mul(&kernel[n2][r]));
            }
            first_difference(&beta, &sum).map(|f| ((n1, n2), f))
        })
        .collect();
    let first = failures.into_iter().min_by_key(|(cell, _)| *cell);
    let detail = first.as_ref().map(|((a, b), _)| format!("cell ({a}, {b})"));
    let report = VerificationReport::new("eq1_pair", None, order, first.map(|(_, f)| f), started);
    match detail {
        Some(d) => report.with_detail(d),
        None => report.with_detail(format!("cells n1, n2 <= {bound}")),
    }
}

/// The two-fold lemma with `a = a_1 = a_2 = 1` and constant parameters
/// `x, y, z, w`, applied to the diagonal pair.
pub fn verify_eq2_specialized(
    x: &Rational,
    y: &Rational,
    z: &Rational,
    w: &Rational,
    order: usize,
) -> Result<VerificationReport> {
    let started = Instant::now();
    for (name, v) in [("x", x), ("y", y), ("z", z), ("w", w)] {
        if v.is_zero() {
            return Err(Error::DegenerateParameter(format!("{name} = 0")));
        }
        if v.is_one() {
            return Err(Error::DegenerateParameter(format!("{name} = 1")));
        }
    }
    if (x * y).is_one() {
        return Err(Error::DegenerateParameter("x*y = 1".into()));
    }
    if (z * w).is_one() {
        return Err(Error::DegenerateParameter("z*w = 1".into()));
    }
    let xy_inv = (x * y).recip();
    let zw_inv = (z * w).recip();

    // weight(u, v, c)[n] = (u)_n (v)_n c^n q^n
    let weights = |u: &Rational, v: &Rational, c: &Rational| -> Vec<Series<Rational>> {
        let mut out = Vec::with_capacity(order + 1);
        let mut cur = Series::<Rational>::one(order);
        let mut pow = Rational::one();
        for n in 0..=order {
            out.push(cur.shift(n).scale(&pow));
            cur.mul_one_minus(u, n);
            cur.mul_one_minus(v, n);
            pow *= c;
        }
        out
    };
    let wx = weights(x, y, &xy_inv);
    let wz = weights(z, w, &zw_inv);
    let recip: Vec<Series<Rational>> =
        (0..=order).map(|m| reciprocal_pochhammer(1, m, order)).collect();

    // LHS, grouped by n = n1 + n2 since beta_{n1,n2} = recip[n1] recip[n2] recip[n]
    let xr: Vec<Series<Rational>> = (0..=order).into_par_iter().map(|n| wx[n].mul(&recip[n])).collect();
    let zr: Vec<Series<Rational>> = (0..=order).into_par_iter().map(|n| wz[n].mul(&recip[n])).collect();
    let lhs = (0..=order)
        .into_par_iter()
        .map(|n| {
            let mut diag = Series::zero(order);
            for n1 in 0..=n {
                diag.add_assign(&xr[n1].mul(&zr[n - n1]));
            }
            diag.mul(&recip[n])
        })
        .reduce(|| Series::zero(order), |a, b| a.add(&b));

    let inv = |c: &Rational| c.recip();
    let (xi, yi, zi, wi) = (inv(x), inv(y), inv(z), inv(w));
    let mut rhs_sum = Series::zero(order);
    let mut n = 0usize;
    while 2 * n + n * (3 * n).saturating_sub(1) / 2 <= order {
        let alpha: Series<Rational> = pair_alpha(n, n, order);
        let den = scaled_pochhammer(&xi, 1, n, order)
            .mul(&scaled_pochhammer(&yi, 1, n, order))
            .mul(&scaled_pochhammer(&zi, 1, n, order))
            .mul(&scaled_pochhammer(&wi, 1, n, order));
        let term = alpha.mul(&wx[n]).mul(&wz[n]).mul(&den.invert()?);
        rhs_sum.add_assign(&term);
        n += 1;
    }
    let numer = scaled_infinite_pochhammer(&xi, 1, order)
        .mul(&scaled_infinite_pochhammer(&yi, 1, order))
        .mul(&scaled_infinite_pochhammer(&zi, 1, order))
        .mul(&scaled_infinite_pochhammer(&wi, 1, order));
    let one = Rational::one();
    let denom = scaled_infinite_pochhammer(&one, 1, order)
        .mul(&scaled_infinite_pochhammer(&one, 1, order))
        .mul(&scaled_infinite_pochhammer(&xy_inv, 1, order))
        .mul(&scaled_infinite_pochhammer(&zw_inv, 1, order));
    let rhs = numer.mul(&denom.invert()?).mul(&rhs_sum);

    let params = [x, y, z, w].map(rational::format).join(", ");
    Ok(VerificationReport::new("eq2_specialized", None, order, first_difference(&lhs, &rhs), started)
        .with_detail(format!("(x, y, z, w) = ({params})")))
}

/// Left side of the differentiated lemma:
/// `sum_{n1,n2>=1} (q)_{n1-1}^2 (q)_{n2-1}^2 beta_{n1,n2} q^{n1+n2}`.
pub fn eq5_lhs<R: Ring>(order: usize) -> Series<R> {
    // half[n] = (q)_{n-1}^2 q^n / (q)_n; beta_{n1,n2} = half-factors times 1/(q)_{n1+n2}
    let mut half: Vec<Series<R>> = vec![Series::zero(order)];
    let mut poch = Series::<R>::one(order);
    for n in 1..=order {
        if n > 1 {
            poch.mul_one_minus_q(n - 1);
        }
        let mut t = poch.mul(&poch).shift(n);
        for k in 1..=n {
            t.div_one_minus_q(k);
        }
        half.push(t);
    }
    let mut lhs = Series::zero(order);
    for n in 2..=order {
        let mut diag = Series::zero(order);
        for n1 in 1..n {
            diag.add_assign(&half[n1].mul(&half[n - n1]));
        }
        lhs.add_assign(&diag.mul(&reciprocal_pochhammer(1, n, order)));
    }
    lhs
}

/// Right side of the differentiated lemma:
/// `Phi_1^2 + sum_{n1,n2>=1} alpha_{n1,n2} q^{n1+n2} / ((1-q^{n1})^2 (1-q^{n2})^2)`.
pub fn eq5_rhs<R: Ring>(order: usize) -> Series<R> {
    let phi1 = lambert_phi::<R>(1, order);
    let mut rhs = phi1.mul(&phi1);
    for n1 in 1..=order {
        for n2 in 1..=order - n1 {
            let alpha: Series<R> = pair_alpha(n1, n2, order);
            if alpha.is_zero() {
                continue;
            }
            let mut t = alpha.shift(n1 + n2);
            for _ in 0..2 {
                t.div_one_minus_q(n1);
                t.div_one_minus_q(n2);
            }
            rhs.add_assign(&t);
        }
    }
    rhs
}

pub fn verify_eq5(order: usize) -> VerificationReport {
    let started = Instant::now();
    let lhs: Series<BigInt> = eq5_lhs(order);
    let rhs: Series<BigInt> = eq5_rhs(order);
    VerificationReport::new("eq5", None, order, first_difference(&lhs, &rhs), started)
}

/// `P Phi_1^2 + P sum_{n != 0} (-1)^n q^{3n(n+1)/2} / (1 - q^n)^4`.
pub fn theorem1_rhs<R: Ring>(order: usize) -> Series<R> {
    let p = euler_p::<R>(order);
    let phi1 = lambert_phi::<R>(1, order);
    let mut bilateral = Series::zero(order);
    for m in 1..=order {
        // n = -m: q^{3m(m-1)/2} / (1 - q^{-m})^4 = q^{3m(m-1)/2 + 4m} / (1 - q^m)^4
        let neg_exp = 3 * m * (m - 1) / 2 + 4 * m;
        let pos_exp = 3 * m * (m + 1) / 2;
        if neg_exp.min(pos_exp) > order {
            break;
        }
        let sign = R::from_i64(if m % 2 == 0 { 1 } else { -1 });
        let mut t = Series::<R>::zero(order);
        for e in [pos_exp, neg_exp] {
            if e <= order {
                let mut c = t.coeff(e).clone();
                c.add_assign_ref(&sign);
                t.set_coeff(e, c);
            }
        }
        for _ in 0..4 {
            t.div_one_minus_q(m);
        }
        bilateral.add_assign(&t);
    }
    p.mul(&phi1.mul(&phi1)).add(&p.mul(&bilateral))
}

/// Three-way check of the spt-sum form, the rearranged double sum and the
/// right-hand side.
pub fn verify_theorem1(order: usize) -> VerificationReport {
    let started = Instant::now();
    let sptplus: Series<BigInt> = spt_plus_series(order);
    let rearranged: Series<BigInt> = theorem1_lhs_rearranged(order);
    let rhs: Series<BigInt> = theorem1_rhs(order);
    theorem1_report(&sptplus, &rearranged, &rhs, order, started)
}

pub(crate) fn theorem1_report(
    sptplus: &Series<BigInt>,
    rearranged: &Series<BigInt>,
    rhs: &Series<BigInt>,
    order: usize,
    started: Instant,
) -> VerificationReport {
    let a = first_difference(sptplus, rhs);
    let b = first_difference(rearranged, rhs);
    let detail = match (&a, &b) {
        (None, None) => "spt-sum form = rearranged form = right side",
        (Some(_), None) => "spt-sum form differs from right side",
        (None, Some(_)) => "rearranged form differs from right side",
        (Some(_), Some(_)) => "both left-hand forms differ from right side",
    };
    VerificationReport::new("thm1", None, order, earliest(a, b), started).with_detail(detail)
}

/// `true` if every cell of the pair has `alpha` supported on the diagonal
/// and `beta_{0,0} = 1`.
pub fn pair_shape_holds(bound: usize, order: usize) -> bool {
    if pair_beta::<BigInt>(0, 0, order) != Series::one(order) {
        return false;
    }
    (0..=bound).all(|a| (0..=bound).all(|b| a == b || pair_alpha::<BigInt>(a, b, order).is_zero()))
}
