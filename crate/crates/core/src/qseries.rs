//! Standard q-series: Pochhammer products, the partition generating
//! function, Lambert series and the smallest-part weight.
//!
//! Pochhammer symbols use the n-factor convention
//! `(X; q)_n = (1 - X)(1 - Xq)...(1 - Xq^{n-1})`, so `(X; q)_0 = 1`.

use crate::ring::Ring;
use crate::series::Series;

/// `(q^m; q)_n` truncated at `order`.
pub fn finite_pochhammer<R: Ring>(m: usize, n: usize, order: usize) -> Series<R> {
    assert!(m >= 1, "finite_pochhammer needs m >= 1");
    let mut s = Series::one(order);
    for k in 0..n {
        if m + k > order {
            break;
        }
        s.mul_one_minus_q(m + k);
    }
    s
}

/// `(q^m; q)_inf`; factors `1 - q^k` with `k > order` are omitted.
pub fn infinite_pochhammer<R: Ring>(m: usize, order: usize) -> Series<R> {
    assert!(m >= 1, "infinite_pochhammer needs m >= 1");
    finite_pochhammer(m, order.saturating_sub(m) + 1, order)
}

/// `1 / (q^m; q)_n`.
pub fn reciprocal_pochhammer<R: Ring>(m: usize, n: usize, order: usize) -> Series<R> {
    assert!(m >= 1);
    let mut s = Series::one(order);
    for k in 0..n {
        if m + k > order {
            break;
        }
        s.div_one_minus_q(m + k);
    }
    s
}

/// `(c q^m; q)_n` for a constant `c`; `m = 0` includes the constant factor `1 - c`.
pub fn scaled_pochhammer<R: Ring>(c: &R, m: usize, n: usize, order: usize) -> Series<R> {
    let mut s = Series::one(order);
    for k in 0..n {
        if m + k > order {
            break;
        }
        s.mul_one_minus(c, m + k);
    }
    s
}

/// `(c q^m; q)_inf` for `m >= 1`.
pub fn scaled_infinite_pochhammer<R: Ring>(c: &R, m: usize, order: usize) -> Series<R> {
    assert!(m >= 1);
    scaled_pochhammer(c, m, order.saturating_sub(m) + 1, order)
}

/// `P = 1/(q; q)_inf`, whose coefficients are the partition numbers p(n).
pub fn euler_p<R: Ring>(order: usize) -> Series<R> {
    reciprocal_pochhammer(1, order, order)
}

/// Lambert series `Phi_i = sum_{n>=1} n^i q^n / (1 - q^n)`; the coefficient of
/// `q^N` is the divisor power sum `sigma_i(N)`.
pub fn lambert_phi<R: Ring>(i: u32, order: usize) -> Series<R> {
    assert!(i >= 1, "lambert_phi needs i >= 1");
    let mut coeffs = vec![R::zero(); order + 1];
    for d in 1..=order {
        let w = R::from_i64((d as i64).pow(i));
        for m in (d..=order).step_by(d) {
            coeffs[m].add_assign_ref(&w);
        }
    }
    Series::from_coeffs(coeffs)
}

/// `q^j / (1 - q^j)^2 = sum_{m>=1} m q^{jm}`.
pub fn smallest_part_weight<R: Ring>(j: usize, order: usize) -> Series<R> {
    assert!(j >= 1, "smallest_part_weight needs j >= 1");
    let mut s = Series::zero(order);
    for (m, e) in (j..=order).step_by(j).enumerate() {
        s.set_coeff(e, R::from_i64(m as i64 + 1));
    }
    s
}
