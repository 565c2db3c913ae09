use std::str::FromStr;

use num_bigint::BigInt;

use super::context::Precomputed;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::Series;
use crate::spt::{spt_j_series, spt_j_star_series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComputeStat {
    P,
    Spt,
    SptJ,
    SptJStar,
    SptPlus,
    RankMoment,
    CrankMoment,
    Eta,
    Mu,
}

impl ComputeStat {
    pub const ALL: [ComputeStat; 9] = [
        ComputeStat::P,
        ComputeStat::Spt,
        ComputeStat::SptJ,
        ComputeStat::SptJStar,
        ComputeStat::SptPlus,
        ComputeStat::RankMoment,
        ComputeStat::CrankMoment,
        ComputeStat::Eta,
        ComputeStat::Mu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ComputeStat::P => "p",
            ComputeStat::Spt => "spt",
            ComputeStat::SptJ => "spt_j",
            ComputeStat::SptJStar => "spt_j_star",
            ComputeStat::SptPlus => "SPT_plus",
            ComputeStat::RankMoment => "N_k",
            ComputeStat::CrankMoment => "M_k",
            ComputeStat::Eta => "eta_k",
            ComputeStat::Mu => "mu_k",
        }
    }
}

impl FromStr for ComputeStat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ComputeStat::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown statistic `{s}`")))
    }
}

/// Values `(n, stat(n))` for `n = 0..=upto`.
///
/// `j` is required by `spt_j` and `spt_j_star`, `k` by the moment statistics.
pub fn compute(
    stat: ComputeStat,
    upto: usize,
    j: Option<usize>,
    k: Option<u32>,
) -> Result<Vec<(usize, Rational)>> {
    let need_j = || match j {
        Some(j) if j >= 1 => Ok(j),
        _ => Err(Error::InvalidArgument(format!("{} needs --j >= 1", stat.name()))),
    };
    let need_k = || match k {
        Some(k) if k >= 1 => Ok(k),
        _ => Err(Error::InvalidArgument(format!("{} needs --k >= 1", stat.name()))),
    };
    let ctx = Precomputed::new(upto);
    let from_series = |s: &Series<BigInt>| -> Vec<(usize, Rational)> {
        s.coeffs().iter().enumerate().map(|(n, c)| (n, Rational::from_integer(c.clone()))).collect()
    };
    let from_table = |f: &dyn Fn(usize) -> Result<Rational>| -> Result<Vec<(usize, Rational)>> {
        (0..=upto).map(|n| Ok((n, f(n)?))).collect()
    };
    match stat {
        ComputeStat::P => Ok(from_series(ctx.p())),
        ComputeStat::Spt => Ok(from_series(ctx.spt())),
        ComputeStat::SptJ => Ok(from_series(&spt_j_series(need_j()?, upto))),
        ComputeStat::SptJStar => Ok(from_series(&spt_j_star_series(need_j()?, upto))),
        ComputeStat::SptPlus => Ok(from_series(ctx.spt_plus())),
        ComputeStat::RankMoment => {
            let k = need_k()?;
            from_table(&|n| ctx.rank().moment(k, n))
        }
        ComputeStat::CrankMoment => {
            let k = need_k()?;
            from_table(&|n| ctx.crank().moment(k, n))
        }
        ComputeStat::Eta => {
            let k = need_k()?;
            from_table(&|n| ctx.rank().symmetrized_moment(k, n))
        }
        ComputeStat::Mu => {
            let k = need_k()?;
            from_table(&|n| ctx.crank().symmetrized_moment(k, n))
        }
    }
}
