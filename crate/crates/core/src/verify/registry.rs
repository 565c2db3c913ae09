use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::checks::*;
use super::context::Precomputed;
use crate::bailey::{verify_eq5, verify_pair};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::rational::Rational;
use crate::report::{Status, VerificationReport};
use crate::Variant;

/// Largest cell index checked by `eq1_pair`.
pub const PAIR_BOUND: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Eq1Pair,
    Eq2Specialized,
    Eq5,
    Thm1,
    Thm1RearrangedEqualsSptplus,
    Eq7EtaGf,
    Eq8,
    Eq9,
    Eq10,
    Eq11,
    Thm2,
    Thm3Mod7,
    Thm3Mod11,
    Eta4Relation,
    SptRelation,
    SptjSum,
    ComponentCongruences,
}

impl IdentityId {
    pub const ALL: [IdentityId; 17] = [
        IdentityId::Eq1Pair,
        IdentityId::Eq2Specialized,
        IdentityId::Eq5,
        IdentityId::Thm1,
        IdentityId::Thm1RearrangedEqualsSptplus,
        IdentityId::Eq7EtaGf,
        IdentityId::Eq8,
        IdentityId::Eq9,
        IdentityId::Eq10,
        IdentityId::Eq11,
        IdentityId::Thm2,
        IdentityId::Thm3Mod7,
        IdentityId::Thm3Mod11,
        IdentityId::Eta4Relation,
        IdentityId::SptRelation,
        IdentityId::SptjSum,
        IdentityId::ComponentCongruences,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq1Pair => "eq1_pair",
            IdentityId::Eq2Specialized => "eq2_specialized",
            IdentityId::Eq5 => "eq5",
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm1RearrangedEqualsSptplus => "thm1_rearranged_equals_sptplus",
            IdentityId::Eq7EtaGf => "eq7_eta_gf",
            IdentityId::Eq8 => "eq8",
            IdentityId::Eq9 => "eq9",
            IdentityId::Eq10 => "eq10",
            IdentityId::Eq11 => "eq11",
            IdentityId::Thm2 => "thm2",
            IdentityId::Thm3Mod7 => "thm3_mod7",
            IdentityId::Thm3Mod11 => "thm3_mod11",
            IdentityId::Eta4Relation => "eta4_relation",
            IdentityId::SptRelation => "spt_relation",
            IdentityId::SptjSum => "sptj_sum",
            IdentityId::ComponentCongruences => "component_congruences",
        }
    }

    /// Identities checked in both printed and corrected form.
    pub fn has_variants(self) -> bool {
        matches!(self, IdentityId::Eq7EtaGf | IdentityId::Eq10 | IdentityId::Eq11 | IdentityId::Thm2)
    }

    pub fn default_order(self) -> usize {
        match self {
            IdentityId::Eq1Pair => 80,
            IdentityId::Eq2Specialized
            | IdentityId::Eq5
            | IdentityId::Thm1
            | IdentityId::Thm1RearrangedEqualsSptplus
            | IdentityId::Eq7EtaGf => 60,
            IdentityId::Eq8
            | IdentityId::Eq9
            | IdentityId::Eq10
            | IdentityId::Eq11
            | IdentityId::Thm2 => 200,
            IdentityId::Eta4Relation | IdentityId::SptRelation | IdentityId::SptjSum => 300,
            IdentityId::Thm3Mod7 | IdentityId::ComponentCongruences => 490,
            IdentityId::Thm3Mod11 => 440,
        }
    }

    /// Printed variants are expected to fail; everything else to pass.
    pub fn expected(self, variant: Option<Variant>) -> Status {
        match variant {
            Some(Variant::Printed) => Status::Fail,
            _ => Status::Pass,
        }
    }

    fn variants(self) -> Vec<Option<Variant>> {
        if self.has_variants() {
            vec![Some(Variant::Printed), Some(Variant::Corrected)]
        } else {
            vec![None]
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// A report together with the status it was expected to have.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: IdentityId,
    pub expected: Status,
    pub report: VerificationReport,
}

impl Outcome {
    pub fn met(&self) -> bool {
        self.report.status == self.expected
    }
}

/// Runs one identity against a shared context. `variant` defaults to
/// `Corrected` for identities that have variants and must be absent for the
/// rest; `params` only applies to `eq2_specialized`.
pub fn run_identity_with(
    ctx: &Precomputed,
    id: IdentityId,
    order: usize,
    variant: Option<Variant>,
    params: Option<[Rational; 4]>,
) -> Result<Outcome> {
    let variant = match (id.has_variants(), variant) {
        (true, v) => Some(v.unwrap_or(Variant::Corrected)),
        (false, None) => None,
        (false, Some(v)) => {
            return Err(Error::UnsupportedVariant { identity: id.name().into(), variant: v.name().into() })
        }
    };
    if params.is_some() && id != IdentityId::Eq2Specialized {
        return Err(Error::InvalidArgument(format!("{id} takes no parameters")));
    }
    let v = variant.unwrap_or(Variant::Corrected);
    let oracle = Oracle::default();
    let report = match id {
        IdentityId::Eq1Pair => verify_pair(PAIR_BOUND.min(order), order),
        IdentityId::Eq2Specialized => check_eq2(order, params)?,
        IdentityId::Eq5 => verify_eq5(order),
        IdentityId::Thm1 => check_thm1(ctx, order)?,
        IdentityId::Thm1RearrangedEqualsSptplus => check_thm1_rearranged(ctx, order)?,
        IdentityId::Eq7EtaGf => check_eq7(ctx, order, v)?,
        IdentityId::Eq8 => check_eq8(ctx, order)?,
        IdentityId::Eq9 => check_eq9(ctx, order)?,
        IdentityId::Eq10 => check_eq10(ctx, order, v)?,
        IdentityId::Eq11 => check_eq11(ctx, order, v)?,
        IdentityId::Thm2 => check_thm2(ctx, order, v)?,
        IdentityId::Thm3Mod7 => check_thm3(ctx, 7, order)?,
        IdentityId::Thm3Mod11 => check_thm3(ctx, 11, order)?,
        IdentityId::Eta4Relation => check_eta4_relation(ctx, order)?,
        IdentityId::SptRelation => check_spt_relation(ctx, order, &oracle)?,
        IdentityId::SptjSum => check_sptj_sum(ctx, order, &oracle)?,
        IdentityId::ComponentCongruences => check_component_congruences(ctx, order)?,
    };
    Ok(Outcome { id, expected: id.expected(variant), report })
}

/// Runs one identity by name at `order` (or its default order).
pub fn run_identity(
    id: &str,
    order: Option<usize>,
    variant: Option<Variant>,
    params: Option<[Rational; 4]>,
) -> Result<Outcome> {
    let id: IdentityId = id.parse()?;
    let order = order.unwrap_or(id.default_order());
    let ctx = Precomputed::new(order);
    run_identity_with(&ctx, id, order, variant, params)
}

/// Every registered identity, with both variants where applicable, at
/// `order` or at each identity's default order. The shared tables are
/// built once and the identities run in parallel.
pub fn run_all(order: Option<usize>) -> Result<Vec<Outcome>> {
    let order_of = |id: IdentityId| order.unwrap_or(id.default_order());
    let max_order = IdentityId::ALL.iter().map(|&id| order_of(id)).max().unwrap_or(0);
    let ctx = Precomputed::new(max_order);
    ctx.warm();
    let tasks: Vec<(IdentityId, Option<Variant>)> = IdentityId::ALL
        .iter()
        .flat_map(|&id| id.variants().into_iter().map(move |v| (id, v)))
        .collect();
    tasks
        .par_iter()
        .map(|&(id, v)| run_identity_with(&ctx, id, order_of(id), v, None))
        .collect()
}
