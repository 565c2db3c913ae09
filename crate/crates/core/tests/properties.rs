use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use sptlab_core::oracle::{crank_of, rank_of, Oracle, Partition};
use sptlab_core::qseries::{
    euler_p, finite_pochhammer, infinite_pochhammer, lambert_phi, reciprocal_pochhammer, scaled_pochhammer,
};
use sptlab_core::rational::{self, Rational};
use sptlab_core::spt::{spt_j_plus_series, spt_plus_series};
use sptlab_core::stats::{crank_table, generalized_binomial, rank_table};
use sptlab_core::{LaurentPoly, Series};

fn series(max_order: usize) -> impl Strategy<Value = Series<BigInt>> {
    (1..=max_order).prop_flat_map(|order| {
        prop::collection::vec(-20i64..=20, order + 1)
            .prop_map(|v| Series::from_coeffs(v.into_iter().map(BigInt::from).collect()))
    })
}

fn same_order_pair(max_order: usize) -> impl Strategy<Value = (Series<BigInt>, Series<BigInt>, Series<BigInt>)> {
    (1..=max_order).prop_flat_map(|order| {
        let one = || {
            prop::collection::vec(-20i64..=20, order + 1)
                .prop_map(|v| Series::from_coeffs(v.into_iter().map(BigInt::from).collect()))
        };
        (one(), one(), one())
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..6)
        .prop_map(|terms| LaurentPoly::from_pairs(terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=9, 1..10).prop_map(|parts| Partition::new(parts).unwrap())
}

fn conjugate(p: &Partition) -> Partition {
    let largest = p.largest().unwrap_or(0);
    let parts = (1..=largest).map(|i| p.parts().iter().filter(|&&x| x >= i).count()).collect();
    Partition::new(parts).unwrap()
}

/// p(n) through Euler's pentagonal recurrence.
fn pentagonal_p(upto: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); upto + 1];
    p[0] = BigInt::one();
    for n in 1..=upto {
        let mut k = 1usize;
        while k * (3 * k - 1) / 2 <= n {
            let mut term = p[n - k * (3 * k - 1) / 2].clone();
            if k * (3 * k + 1) / 2 <= n {
                term += &p[n - k * (3 * k + 1) / 2];
            }
            if k % 2 == 1 {
                p[n] += term;
            } else {
                p[n] -= term;
            }
            k += 1;
        }
    }
    p
}

proptest! {
    #[test]
    fn series_ring_axioms((a, b, c) in same_order_pair(12)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &Series::one(a.order()), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn unit_series_invert(mut a in series(15), sign in prop::bool::ANY) {
        a.set_coeff(0, BigInt::from(if sign { 1 } else { -1 }));
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, Series::one(a.order()));
    }

    #[test]
    fn rational_series_invert(v in prop::collection::vec(-9i64..=9, 2..12), c0 in 1i64..=5) {
        let mut s: Series<Rational> = Series::from_coeffs(v.into_iter().map(rational::int).collect());
        s.set_coeff(0, rational::ratio(c0, 3));
        let inv = s.invert().unwrap();
        prop_assert_eq!(&s * &inv, Series::one(s.order()));
    }

    #[test]
    fn delta_q_is_a_derivation((a, b, _) in same_order_pair(12)) {
        let lhs = (&a * &b).delta_q();
        let rhs = &(&a.delta_q() * &b) + &(&a * &b.delta_q());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pochhammer_recurrence(m in 1usize..5, n in 0usize..8, order in 1usize..40) {
        let mut stepped: Series<BigInt> = finite_pochhammer(m, n, order);
        stepped.mul_one_minus_q(m + n);
        prop_assert_eq!(stepped, finite_pochhammer(m, n + 1, order));
    }

    #[test]
    fn reciprocal_pochhammer_is_inverse(m in 1usize..5, n in 0usize..8, order in 1usize..40) {
        let f: Series<BigInt> = finite_pochhammer(m, n, order);
        prop_assert_eq!(&f * &reciprocal_pochhammer(m, n, order), Series::one(order));
    }

    #[test]
    fn scaled_pochhammer_at_one(m in 1usize..5, n in 0usize..8, order in 1usize..30) {
        let one = BigInt::one();
        prop_assert_eq!(scaled_pochhammer(&one, m, n, order), finite_pochhammer::<BigInt>(m, n, order));
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()).eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }

    #[test]
    fn conjugation_negates_rank(p in partition()) {
        prop_assert_eq!(rank_of(&conjugate(&p)), -rank_of(&p));
    }

    #[test]
    fn crank_of_large_parts_is_largest(p in partition()) {
        if !p.parts().contains(&1) {
            prop_assert_eq!(crank_of(&p).unwrap(), p.largest().unwrap() as i64);
        }
    }

    #[test]
    fn residue_inverts_denominator(num in -500i64..500, den in 1i64..100, prime in prop::sample::select(vec![5u64, 7, 11, 13])) {
        prop_assume!(den % prime as i64 != 0);
        let r = rational::residue(&rational::ratio(num, den), prime).unwrap();
        let lhs = (r as i128 * den as i128).rem_euclid(prime as i128);
        prop_assert_eq!(lhs, (num as i128).rem_euclid(prime as i128));
    }

    #[test]
    fn residue_refuses_shared_factor(num in 1i64..50, prime in prop::sample::select(vec![7u64, 11])) {
        prop_assume!(num % prime as i64 != 0);
        prop_assert!(rational::residue(&rational::ratio(num, prime as i64), prime).is_err());
    }

    #[test]
    fn generalized_binomial_matches_pascal(x in -30i64..30, k in 1u32..8) {
        let lhs = generalized_binomial(x + 1, k);
        let rhs = generalized_binomial(x, k) + generalized_binomial(x, k - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_format_roundtrip(num in -10_000i64..10_000, den in 1i64..500) {
        let r = rational::ratio(num, den);
        prop_assert_eq!(rational::parse(&rational::format(&r)).unwrap(), r);
    }
}

#[test]
fn lambert_coefficients_are_divisor_sums() {
    let order = 200;
    for i in 1..=3u32 {
        let phi: Series<BigInt> = lambert_phi(i, order);
        assert!(phi.coeff(0).is_zero());
        for n in 1..=order {
            let sigma: BigInt = (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(i)).sum();
            assert_eq!(phi.coeff(n), &sigma, "sigma_{i}({n})");
        }
    }
}

#[test]
fn euler_p_matches_pentagonal_recurrence_and_enumeration() {
    let p: Series<BigInt> = euler_p(300);
    let pent = pentagonal_p(300);
    assert_eq!(p.coeffs(), &pent[..]);
    let oracle = Oracle::default();
    for n in 0..=40 {
        assert_eq!(p.coeff(n), &BigInt::from(oracle.partition_count(n).unwrap()), "p({n})");
    }
    let product: Series<BigInt> = infinite_pochhammer(1, 300);
    assert_eq!(&p * &product, Series::one(300));
}

#[test]
fn tables_are_symmetric_with_row_sums_p() {
    let upto = 120;
    let p: Series<BigInt> = euler_p(upto);
    let rank = rank_table(upto);
    let crank = crank_table(upto);
    for n in 0..=upto {
        assert!(rank.rows()[n].is_symmetric(), "rank row {n}");
        assert!(crank.rows()[n].is_symmetric(), "crank row {n}");
        assert_eq!(&rank.rows()[n].eval_at_one(), p.coeff(n), "rank sum {n}");
        assert_eq!(&crank.rows()[n].eval_at_one(), p.coeff(n), "crank sum {n}");
        if n >= 2 {
            assert!(crank.rows()[n].terms().all(|(_, c)| c > &BigInt::zero()), "crank row {n} positive");
        }
    }
    assert_eq!(crank.rows()[1], LaurentPoly::from_pairs([(-1, 1.into()), (0, (-1).into()), (1, 1.into())]));
}

#[test]
fn odd_moments_vanish_and_symmetrized_moments_are_integers() {
    let upto = 100;
    let rank = rank_table(upto);
    let crank = crank_table(upto);
    for n in 0..=upto {
        for k in [1u32, 3, 5] {
            assert!(rank.moment(k, n).unwrap().is_zero());
            assert!(crank.moment(k, n).unwrap().is_zero());
        }
        for k in 1..=6u32 {
            assert!(rational::is_integer(&rank.symmetrized_moment(k, n).unwrap()), "eta_{k}({n})");
            assert!(rational::is_integer(&crank.symmetrized_moment(k, n).unwrap()), "mu_{k}({n})");
        }
    }
}

#[test]
fn spt_plus_is_the_sum_of_its_parts() {
    let order = 40;
    let mut by_j: Series<BigInt> = Series::zero(order);
    for j in 1..order {
        by_j.add_assign(&spt_j_plus_series(j, order));
    }
    let swept: Series<BigInt> = spt_plus_series(order);
    assert_eq!(by_j, swept);
    assert!(swept.coeffs().iter().all(|c| c >= &BigInt::zero()));
}
