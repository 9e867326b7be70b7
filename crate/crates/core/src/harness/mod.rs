//! Verification harness: one function per identity, table, or proposition,
//! each producing a structured report with a first-mismatch witness on
//! failure, plus an exact-arithmetic prober for the open row-restricted
//! decomposition question.
//!
//! Provides:
//!   verify_rr              both Rogers-Ramanujan identities
//!   verify_rr_sum_rewrite  termwise sum-side rewrite over mod-5 blocks
//!   verify_cauchy_restricted  row-restricted Cauchy identity
//!   verify_table1/2        the n=1 and n=2 class tables
//!   verify_proposition_rsk bijectivity of the mod-5 tableau encoding
//!   verify_xyrr            two-marker refinement of the first identity
//!   verify_finite_identity the finite q-binomial identity
//!   verify_genthm          general-modulus one-row theorem
//!   probe_speculation      ansatz fit for row-restricted sums
//!   verify_borwein         Borwein product via the dual Cauchy identity
//!   verify_macmahon        gap-2 equinumerosity of both partition classes
//!   run_all                the whole suite, reports sorted by name
//!   controls::*            deliberately mutated variants (failure-path tests)

use std::error::Error;
use std::fmt;

mod borwein;
mod cauchy;
pub mod controls;
mod finite;
mod genthm;
mod linsolve;
mod macmahon;
mod report;
mod rewrite;
mod rr;
mod rsk_check;
mod speculation;
mod suite;
mod tables;
mod xyrr;

pub use borwein::verify_borwein;
pub use cauchy::verify_cauchy_restricted;
pub use finite::verify_finite_identity;
pub use genthm::{genthm_coefficients, genthm_j_set, verify_genthm};
pub use macmahon::verify_macmahon;
pub use report::{
    IdentityReport, Mismatch, ProbeReport, SpeculationSolution, SpeculationTerm, Status,
};
pub use rewrite::verify_rr_sum_rewrite;
pub use rr::{verify_rr, RrWhich};
pub use rsk_check::verify_proposition_rsk;
pub use speculation::{check_solution, probe_speculation};
pub use suite::run_all;
pub use tables::{table2_class_lines, verify_table1, verify_table2};
pub use xyrr::verify_xyrr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HarnessError {
    /// A check was asked to run outside its parameter domain.
    InvalidParams(String),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::InvalidParams(what) => write!(f, "invalid parameters: {what}"),
        }
    }
}

impl Error for HarnessError {}
