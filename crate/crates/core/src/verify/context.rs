use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::qseries::{euler_p, lambert_phi};
use crate::rational::Rational;
use crate::series::Series;
use crate::spt::{spt_j_series, spt_plus_series, theorem1_lhs_rearranged};
use crate::stats::{crank_table, rank_table, StatTable};

/// Series and tables shared between checks, built on first use.
///
/// Everything is computed to `order`; checks at a lower order truncate.
pub struct Precomputed {
    order: usize,
    p: OnceLock<Series<BigInt>>,
    phi1: OnceLock<Series<BigInt>>,
    phi3: OnceLock<Series<BigInt>>,
    rank: OnceLock<StatTable>,
    crank: OnceLock<StatTable>,
    spt_plus: OnceLock<Series<BigInt>>,
    rearranged: OnceLock<Series<BigInt>>,
    spt: OnceLock<Series<BigInt>>,
}

impl Precomputed {
    pub fn new(order: usize) -> Self {
        Precomputed {
            order,
            p: OnceLock::new(),
            phi1: OnceLock::new(),
            phi3: OnceLock::new(),
            rank: OnceLock::new(),
            crank: OnceLock::new(),
            spt_plus: OnceLock::new(),
            rearranged: OnceLock::new(),
            spt: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn p(&self) -> &Series<BigInt> {
        self.p.get_or_init(|| euler_p(self.order))
    }

    pub fn phi1(&self) -> &Series<BigInt> {
        self.phi1.get_or_init(|| lambert_phi(1, self.order))
    }

    pub fn phi3(&self) -> &Series<BigInt> {
        self.phi3.get_or_init(|| lambert_phi(3, self.order))
    }

    pub fn rank(&self) -> &StatTable {
        self.rank.get_or_init(|| rank_table(self.order))
    }

    pub fn crank(&self) -> &StatTable {
        self.crank.get_or_init(|| crank_table(self.order))
    }

    /// `sum_j spt_j^+`, the spt-sum form of the double series.
    pub fn spt_plus(&self) -> &Series<BigInt> {
        self.spt_plus.get_or_init(|| spt_plus_series(self.order))
    }

    pub fn rearranged(&self) -> &Series<BigInt> {
        self.rearranged.get_or_init(|| theorem1_lhs_rearranged(self.order))
    }

    /// `sum_j spt_j`, the generating function of spt(n).
    pub fn spt(&self) -> &Series<BigInt> {
        self.spt.get_or_init(|| {
            let mut s = Series::zero(self.order);
            for j in 1..=self.order {
                s.add_assign(&spt_j_series(j, self.order));
            }
            s
        })
    }

    /// Builds the expensive members in parallel.
    pub fn warm(&self) {
        rayon::scope(|s| {
            s.spawn(|_| {
                self.rank();
            });
            s.spawn(|_| {
                self.crank();
            });
            s.spawn(|_| {
                self.spt_plus();
            });
            s.spawn(|_| {
                self.rearranged();
            });
            s.spawn(|_| {
                self.spt();
            });
        });
    }

    /// `P Phi_1^2`, exact.
    pub fn p_phi1_sq(&self, order: usize) -> Series<Rational> {
        let phi1 = self.phi1().clone().truncated(order);
        self.p().clone().truncated(order).mul(&phi1.mul(&phi1)).to_rational()
    }

    pub fn p_times(&self, s: &Series<BigInt>, order: usize) -> Series<Rational> {
        s.clone().truncated(order).mul(&self.p().clone().truncated(order)).to_rational()
    }
}
