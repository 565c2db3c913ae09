//! Brute-force ground truth from explicit partition enumeration.
//!
//! Nothing here touches the series engine, so agreement with the generating
//! functions is a genuine cross-check.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::stats::StatTable;

pub const DEFAULT_BOUND: usize = 40;

/// Parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    /// How many times the smallest part occurs.
    pub fn smallest_multiplicity(&self) -> usize {
        match self.smallest() {
            Some(s) => self.parts.iter().rev().take_while(|&&p| p == s).count(),
            None => 0,
        }
    }
}

/// Partitions of `n` in reverse lexicographic order, starting from `(n)`.
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    fn new(n: usize) -> Self {
        Partitions { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: drop the trailing ones, decrement the last part > 1 and
        // refill greedily with parts no larger than it.
        let mut p = current.clone();
        let mut freed = 0;
        while p.last() == Some(&1) {
            p.pop();
            freed += 1;
        }
        if let Some(last) = p.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                p.push(take);
                freed -= take;
            }
            self.next = Some(p);
        }
        Some(Partition { parts: current })
    }
}

/// Largest part minus number of parts; 0 for the empty partition.
pub fn rank_of(p: &Partition) -> i64 {
    p.largest().unwrap_or(0) as i64 - p.len() as i64
}

/// Andrews-Garvan crank: the largest part when there are no ones, otherwise
/// (number of parts larger than the number of ones) minus (number of ones).
pub fn crank_of(p: &Partition) -> Result<i64> {
    let largest = p.largest().ok_or(Error::EmptyPartition)?;
    let ones = p.parts.iter().filter(|&&x| x == 1).count();
    if ones == 0 {
        Ok(largest as i64)
    } else {
        let mu = p.parts.iter().filter(|&&x| x > ones).count();
        Ok(mu as i64 - ones as i64)
    }
}

/// Enumeration oracle with a resource guard on `n`.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { bound: DEFAULT_BOUND }
    }
}

impl Oracle {
    /// Bounds above 50 are allowed but enumeration cost grows like p(n).
    pub fn with_bound(bound: usize) -> Self {
        Oracle { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.bound {
            Err(Error::OracleBound { n, bound: self.bound })
        } else {
            Ok(())
        }
    }

    pub fn enumerate(&self, n: usize) -> Result<Partitions> {
        self.guard(n)?;
        Ok(Partitions::new(n))
    }

    pub fn partition_count(&self, n: usize) -> Result<u64> {
        Ok(self.enumerate(n)?.count() as u64)
    }

    /// Rank and combinatorial-crank tables for `0..=upto`.
    pub fn stat_tables(&self, upto: usize) -> Result<(StatTable, StatTable)> {
        self.guard(upto)?;
        let mut ranks = Vec::with_capacity(upto + 1);
        let mut cranks = Vec::with_capacity(upto + 1);
        for n in 0..=upto {
            let mut r: BTreeMap<i64, i64> = BTreeMap::new();
            let mut c: BTreeMap<i64, i64> = BTreeMap::new();
            for p in Partitions::new(n) {
                *r.entry(rank_of(&p)).or_default() += 1;
                // n = 0: the empty partition is given crank 0
                let k = if p.is_empty() { 0 } else { crank_of(&p)? };
                *c.entry(k).or_default() += 1;
            }
            ranks.push(to_laurent(&r));
            cranks.push(to_laurent(&c));
        }
        Ok((StatTable::from_rows(ranks), StatTable::from_rows(cranks)))
    }

    /// Total appearances of the smallest part over partitions of `n` whose
    /// smallest part is `j`.
    pub fn spt_j(&self, j: usize, n: usize) -> Result<u64> {
        Ok(self
            .enumerate(n)?
            .filter(|p| p.smallest() == Some(j))
            .map(|p| p.smallest_multiplicity() as u64)
            .sum())
    }

    /// Total appearances of the smallest part `s` over partitions of `n`
    /// whose parts all lie in `[s, s + j]`.
    pub fn spt_j_star(&self, j: usize, n: usize) -> Result<u64> {
        Ok(self
            .enumerate(n)?
            .filter(|p| match (p.smallest(), p.largest()) {
                (Some(s), Some(l)) => l <= s + j,
                _ => false,
            })
            .map(|p| p.smallest_multiplicity() as u64)
            .sum())
    }

    /// Total appearances of smallest parts over all partitions of `n`.
    pub fn spt(&self, n: usize) -> Result<u64> {
        Ok(self.enumerate(n)?.map(|p| p.smallest_multiplicity() as u64).sum())
    }
}

fn to_laurent(counts: &BTreeMap<i64, i64>) -> LaurentPoly {
    LaurentPoly::from_pairs(counts.iter().map(|(&m, &c)| (m, BigInt::from(c))))
}

/// `spt(n)` for `0..=upto` by counting rather than enumerating:
/// `spt(n) = sum_s sum_{m>=1} m * #{partitions of n - ms into parts > s}`.
/// Polynomial in `upto`, so it reaches far past the enumeration bound.
pub fn spt_by_counting(upto: usize) -> Vec<BigInt> {
    // above[t][k] = number of partitions of k with every part >= t
    let mut above = vec![vec![BigInt::from(0); upto + 1]; upto + 2];
    above[upto + 1][0] = BigInt::from(1);
    for t in (1..=upto).rev() {
        let mut row = above[t + 1].clone();
        for k in t..=upto {
            let add = row[k - t].clone();
            row[k] += add;
        }
        above[t] = row;
    }
    let mut spt = vec![BigInt::from(0); upto + 1];
    for s in 1..=upto {
        for m in 1..=upto / s {
            let rest = &above[s + 1];
            for n in m * s..=upto {
                let c = &rest[n - m * s];
                if *c != BigInt::from(0) {
                    spt[n] += c * BigInt::from(m);
                }
            }
        }
    }
    spt
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let o = Oracle::default();
        assert_eq!(o.partition_count(4).unwrap(), 5);
        assert_eq!(o.partition_count(10).unwrap(), 42);
        let empty: Vec<_> = o.enumerate(0).unwrap().collect();
        assert_eq!(empty, vec![parts(&[])]);
        assert_eq!(o.enumerate(41).err(), Some(Error::OracleBound { n: 41, bound: 40 }));
    }

    #[test]
    fn enumeration_order_is_reverse_lexicographic() {
        let got: Vec<Vec<usize>> =
            Oracle::default().enumerate(4).unwrap().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn ranks_and_cranks() {
        assert_eq!(rank_of(&parts(&[3])), 2);
        assert_eq!(rank_of(&parts(&[2, 1])), 0);
        assert_eq!(rank_of(&parts(&[1, 1, 1])), -2);
        assert_eq!(rank_of(&parts(&[])), 0);
        assert_eq!(crank_of(&parts(&[4])).unwrap(), 4);
        assert_eq!(crank_of(&parts(&[2, 1, 1])).unwrap(), -2);
        assert_eq!(crank_of(&parts(&[3, 1])).unwrap(), 0);
        assert_eq!(crank_of(&parts(&[])), Err(Error::EmptyPartition));
    }

    #[test]
    fn oracle_tables() {
        let (rank, crank) = Oracle::default().stat_tables(4).unwrap();
        assert_eq!(rank.count(1, 2).unwrap(), BigInt::from(1));
        assert_eq!(rank.count(-1, 2).unwrap(), BigInt::from(1));
        assert_eq!(rank.row(0).unwrap(), &LaurentPoly::monomial(BigInt::from(1), 0));
        for m in [-4, -2, 0, 2, 4] {
            assert_eq!(crank.count(m, 4).unwrap(), BigInt::from(1));
        }
        // combinatorial crank of (1) is -1
        assert_eq!(crank.row(1).unwrap(), &LaurentPoly::monomial(BigInt::from(1), -1));
    }

    #[test]
    fn spt_family() {
        let o = Oracle::default();
        assert_eq!(o.spt_j(1, 3).unwrap(), 4);
        assert_eq!(o.spt_j(2, 3).unwrap(), 0);
        for n in 1..10 {
            assert_eq!(o.spt_j(n, n).unwrap(), 1);
        }
        assert_eq!(o.spt_j_star(1, 3).unwrap(), 5);
        assert_eq!(o.spt_j_star(2, 2).unwrap(), 3);
        for j in 1..6 {
            assert_eq!(o.spt_j_star(j, 1).unwrap(), 1);
        }
        let spt: Vec<u64> = (1..=4).map(|n| o.spt(n).unwrap()).collect();
        assert_eq!(spt, vec![1, 3, 5, 10]);
    }

    #[test]
    fn counting_matches_enumeration() {
        let o = Oracle::default();
        let counted = spt_by_counting(25);
        for n in 0..=25 {
            assert_eq!(counted[n], BigInt::from(o.spt(n).unwrap()), "n = {n}");
        }
    }
}
