//! Exact machinery for verifying Rogers-Ramanujan-type identities:
//! truncated q-series arithmetic over arbitrary-precision rationals,
//! factored q-Pochhammer products, integer partitions under constraints,
//! column-strict tableaux, Schur function specializations (three
//! independent strategies), the RSK correspondence, and a harness that
//! runs every check and probes the open row-restricted decomposition.

pub mod harness;
pub mod partitions;
pub mod qseries;
pub mod rsk;
pub mod schur;
pub mod tableaux;

pub use partitions::Partition;
pub use qseries::{FactoredProduct, QPoly, QSeries, RationalFunction, XYSeries};
