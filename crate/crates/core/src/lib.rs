//! Exact verification of q-series identities for partition statistics.
//!
//! Every quantity is computed with exact integer or rational arithmetic on
//! truncated power series, and most are computed twice: once from a
//! generating function and once by direct counting.

pub mod bailey;
pub mod error;
pub mod laurent;
pub mod oracle;
pub mod qseries;
pub mod rational;
pub mod report;
pub mod ring;
pub mod series;
pub mod spt;
pub mod stats;
pub mod verify;

use std::fmt;
use std::str::FromStr;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use rational::Rational;
pub use report::{FirstFailure, Status, VerificationReport};
pub use ring::Ring;
pub use series::Series;
pub use stats::StatTable;

/// Which form of a misprinted identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Constants and signs as printed.
    Printed,
    /// Constants re-derived so that the identity holds.
    Corrected,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Printed => "printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(Variant::Printed),
            "corrected" => Ok(Variant::Corrected),
            other => Err(Error::InvalidArgument(format!("unknown variant `{other}`"))),
        }
    }
}
