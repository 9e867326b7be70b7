//! Report types shared by all checks, plus the comparison helpers that
//! produce them. Every series- or polynomial-valued check funnels through
//! the same first-mismatch scan so failure witnesses are uniform.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num::{BigInt, BigRational};

use crate::qseries::{QPoly, QSeries, RationalFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Used by the decomposition prober when the fit neither succeeds nor
    /// yields a contradiction at the requested order.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "Pass"),
            Status::Fail => write!(f, "Fail"),
            Status::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

/// First coefficient where the two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity_name: String,
    pub params: BTreeMap<String, i64>,
    pub order: usize,
    pub status: Status,
    /// Present exactly when `status == Fail`.
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: u128,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.identity_name)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", ps.join(", "))?;
        }
        write!(f, " order {}: {}", self.order, self.status)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, " at q^{} (lhs {}, rhs {})", m.exponent, m.lhs, m.rhs)?;
        }
        write!(f, " ({} ms)", self.elapsed_ms)
    }
}

/// One term of a fitted decomposition: a residue subset together with the
/// exact rational-function coefficient attached to its product.
#[derive(Debug, Clone)]
pub struct SpeculationTerm {
    pub residues: Vec<usize>,
    pub coefficient: RationalFunction,
}

#[derive(Debug, Clone)]
pub struct SpeculationSolution {
    pub k: usize,
    pub i: usize,
    pub rows: usize,
    pub subsets: Vec<SpeculationTerm>,
    /// Order through which the fitted decomposition was re-verified,
    /// including the coefficients withheld from the fit.
    pub residual_order: usize,
}

/// Prober output: the usual report plus the solution when one was found.
#[derive(Debug, Clone)]
pub struct ProbeReport {
    pub base: IdentityReport,
    pub solution: Option<SpeculationSolution>,
}

pub(crate) fn params_map(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Build a report by scanning two series for their first disagreement.
pub(crate) fn report_from_series(
    name: &str,
    params: &[(&str, i64)],
    lhs: &QSeries,
    rhs: &QSeries,
    started: Instant,
) -> IdentityReport {
    let order = lhs.order().min(rhs.order());
    let first_mismatch = lhs
        .first_mismatch(rhs)
        .map(|(exponent, lhs, rhs)| Mismatch { exponent, lhs, rhs });
    finish(name, params, order, first_mismatch, started)
}

/// Build a report from a precomputed mismatch (used by checks that compare
/// many exact objects and surface the earliest failure).
pub(crate) fn finish(
    name: &str,
    params: &[(&str, i64)],
    order: usize,
    first_mismatch: Option<Mismatch>,
    started: Instant,
) -> IdentityReport {
    let status = if first_mismatch.is_some() {
        Status::Fail
    } else {
        Status::Pass
    };
    IdentityReport {
        identity_name: name.to_string(),
        params: params_map(params),
        order,
        status,
        first_mismatch,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// First exponent at which two exact polynomials differ.
pub(crate) fn first_poly_mismatch(lhs: &QPoly, rhs: &QPoly) -> Option<Mismatch> {
    let top = lhs.degree().unwrap_or(0).max(rhs.degree().unwrap_or(0));
    (0..=top).find_map(|e| {
        let (a, b) = (lhs.coeff(e), rhs.coeff(e));
        (a != b).then(|| Mismatch {
            exponent: e,
            lhs: a,
            rhs: b,
        })
    })
}

/// Integer count sequence viewed as a series, so count-based checks reuse
/// the series comparator.
pub(crate) fn series_from_counts(counts: &[u64]) -> QSeries {
    assert!(!counts.is_empty());
    let coeffs: Vec<BigRational> = counts
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    QSeries::new(coeffs, counts.len() - 1)
}
