//! Identity registry, moment-identity checks, congruence scanning and
//! tabulation of statistics.

mod checks;
mod compute;
mod congruence;
mod context;
mod registry;

pub use checks::{
    check_component_congruences, check_eq10, check_eq11, check_eq2, check_eq7, check_eq8,
    check_eq9, check_eta4_relation, check_spt_relation, check_sptj_sum, check_thm1,
    check_thm1_rearranged, check_thm2, check_thm3, eq10_constant, eq11_constant, thm2_constants,
    EQ2_DEFAULT_PARAMS,
};
pub use compute::{compute, ComputeStat};
pub use congruence::{check_congruence, CongruenceStat};
pub use context::Precomputed;
pub use registry::{run_all, run_identity, run_identity_with, IdentityId, Outcome};
