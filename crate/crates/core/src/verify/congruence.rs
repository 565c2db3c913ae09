use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::Zero;

use super::checks::thm2_rhs;
use super::context::Precomputed;
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::report::{FirstFailure, VerificationReport};
use crate::spt::spt_j_series;
use crate::Variant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CongruenceStat {
    /// `SPT+(n)` from the spt-sum series.
    SptPlus,
    /// `SPT+(n)` from the corrected moment decomposition.
    SptPlusDecomposed,
    M2,
    M4,
    Eta4,
    /// Smallest part equal to 2.
    Spt2,
}

impl CongruenceStat {
    pub const ALL: [CongruenceStat; 6] = [
        CongruenceStat::SptPlus,
        CongruenceStat::SptPlusDecomposed,
        CongruenceStat::M2,
        CongruenceStat::M4,
        CongruenceStat::Eta4,
        CongruenceStat::Spt2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CongruenceStat::SptPlus => "SPT_plus",
            CongruenceStat::SptPlusDecomposed => "SPT_plus_decomposed",
            CongruenceStat::M2 => "M2",
            CongruenceStat::M4 => "M4",
            CongruenceStat::Eta4 => "eta4",
            CongruenceStat::Spt2 => "spt2",
        }
    }

    pub fn value(self, ctx: &Precomputed, n: usize) -> Result<Rational> {
        match self {
            CongruenceStat::SptPlus => Ok(Rational::from_integer(ctx.spt_plus().coeff(n).clone())),
            CongruenceStat::SptPlusDecomposed => thm2_rhs(ctx, n, Variant::Corrected),
            CongruenceStat::M2 => ctx.crank().moment(2, n),
            CongruenceStat::M4 => ctx.crank().moment(4, n),
            CongruenceStat::Eta4 => ctx.rank().symmetrized_moment(4, n),
            CongruenceStat::Spt2 => {
                let s = spt_j_series::<num_bigint::BigInt>(2, n);
                Ok(Rational::from_integer(s.coeff(n).clone()))
            }
        }
    }
}

impl fmt::Display for CongruenceStat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CongruenceStat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CongruenceStat::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown congruence statistic `{s}`")))
    }
}

/// Checks `stat(n) = 0 (mod modulus)` for `n = stride, 2 stride, ... <= upto`.
///
/// Rational values are reduced as `a * b^-1`. A failing report carries the
/// residue as `lhs` and `0` as `rhs`.
pub fn check_congruence(
    ctx: &Precomputed,
    stat: CongruenceStat,
    modulus: u64,
    stride: usize,
    upto: usize,
) -> Result<VerificationReport> {
    if modulus == 0 || stride == 0 {
        return Err(Error::InvalidArgument("modulus and stride must be positive".into()));
    }
    if upto > ctx.order() {
        return Err(Error::OutOfRange { n: upto, upto: ctx.order() });
    }
    let started = Instant::now();
    let mut failure = None;
    let mut detail = None;
    for n in (stride..=upto).step_by(stride) {
        let v = stat.value(ctx, n)?;
        let r = rational::residue(&v, modulus)?;
        if r != 0 {
            detail = Some(format!("{}({n}) = {}", stat.name(), rational::format(&v)));
            failure = Some(FirstFailure::new(n, int(r as i64), Rational::zero()));
            break;
        }
    }
    let id = format!("congruence:{}:mod{modulus}:stride{stride}", stat.name());
    let report = VerificationReport::new(&id, None, upto, failure, started);
    Ok(match detail {
        Some(d) => report.with_detail(d),
        None => report,
    })
}
