//! Pass/fail reports with first-discrepancy evidence.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::rational::{self, Rational};
use crate::ring::{Ring, ToRational};
use crate::series::Series;
use crate::Variant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first index where the two sides disagree. `diff` is `rhs - lhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstFailure {
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub diff: Rational,
}

impl FirstFailure {
    pub fn new(n: usize, lhs: Rational, rhs: Rational) -> Self {
        let diff = &rhs - &lhs;
        FirstFailure { n, lhs, rhs, diff }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub identity: String,
    pub variant: Option<Variant>,
    pub order: usize,
    pub status: Status,
    pub first_failure: Option<FirstFailure>,
    pub runtime_ms: u64,
    /// Free-form context, e.g. which cell or parameter set failed.
    pub detail: Option<String>,
}

impl VerificationReport {
    pub fn new(
        identity: &str,
        variant: Option<Variant>,
        order: usize,
        first_failure: Option<FirstFailure>,
        started: Instant,
    ) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            variant,
            order,
            status: if first_failure.is_some() { Status::Fail } else { Status::Pass },
            first_failure,
            runtime_ms: started.elapsed().as_millis() as u64,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn variant_name(&self) -> &'static str {
        self.variant.map_or("n/a", Variant::name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Failure {
            n: usize,
            lhs: String,
            rhs: String,
            diff: String,
        }
        #[derive(Serialize)]
        struct Json<'a> {
            identity: &'a str,
            variant: &'a str,
            order: usize,
            status: Status,
            first_failure: Option<Failure>,
            runtime_ms: u64,
            #[serde(skip_serializing_if = "Option::is_none")]
            detail: Option<&'a str>,
        }
        let j = Json {
            identity: &self.identity,
            variant: self.variant_name(),
            order: self.order,
            status: self.status,
            first_failure: self.first_failure.as_ref().map(|f| Failure {
                n: f.n,
                lhs: rational::format(&f.lhs),
                rhs: rational::format(&f.rhs),
                diff: rational::format(&f.diff),
            }),
            runtime_ms: self.runtime_ms,
            detail: self.detail.as_deref(),
        };
        serde_json::to_value(j).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{:<32} {:<9} order={:<4} {status}", self.identity, self.variant_name(), self.order)?;
        if let Some(ff) = &self.first_failure {
            write!(
                f,
                " first n={} lhs={} rhs={} diff={}",
                ff.n,
                rational::format(&ff.lhs),
                rational::format(&ff.rhs),
                rational::format(&ff.diff)
            )?;
        }
        if let Some(d) = &self.detail {
            write!(f, " [{d}]")?;
        }
        write!(f, " ({} ms)", self.runtime_ms)
    }
}

/// First coefficient where the series differ, up to their common order.
pub fn first_difference<R: Ring + ToRational>(lhs: &Series<R>, rhs: &Series<R>) -> Option<FirstFailure> {
    lhs.coeffs()
        .iter()
        .zip(rhs.coeffs())
        .position(|(a, b)| a != b)
        .map(|n| FirstFailure::new(n, lhs.coeff(n).to_rational(), rhs.coeff(n).to_rational()))
}

/// Earlier of two failures by index; ties keep the first.
pub fn earliest(a: Option<FirstFailure>, b: Option<FirstFailure>) -> Option<FirstFailure> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.n < x.n { y } else { x }),
        (x, y) => x.or(y),
    }
}
