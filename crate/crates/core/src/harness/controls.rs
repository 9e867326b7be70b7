//! Negative controls: each function reruns one check with a single
//! deliberately mutated exponent and must come back Fail, witnessing that
//! the comparison machinery actually detects the smallest divergence.
//! Every control names its mutation in the doc comment; the expected
//! first-mismatch exponents are locked by tests here and by the
//! acceptance suite.

use std::time::Instant;

use crate::partitions::{count, PartitionConstraint};
use crate::qseries::{QPoly, QSeries, RationalFunction};
use crate::tableaux::Alphabet;

use super::borwein::{borwein_lhs, borwein_rhs};
use super::cauchy::restricted_cauchy_sum;
use super::finite::{finite_lhs, finite_rhs_by_division};
use super::genthm::genthm_lhs;
use super::report::{
    finish, report_from_series, series_from_counts, IdentityReport, Mismatch, SpeculationTerm,
};
use super::rewrite::{rewrite_lhs_term, rewrite_rhs_term};
use super::rr::{inverse_pochhammer_product, rr_sum};
use super::speculation::check_solution;
use super::tables::{numerator_over_q5, table1_subclass_counts, table2_class_counts, table2_formula};
use super::xyrr::{xyrr_product_side, xyrr_sum_side};

/// First sum against the product with residue 4 moved to 3: the mutated
/// product picks up the partition (3) and first diverges at q^3.
pub fn mutated_rr(order: usize) -> IdentityReport {
    let started = Instant::now();
    let lhs = rr_sum(0, order);
    let rhs = inverse_pochhammer_product(&[(1, 5), (3, 5)], order);
    report_from_series("rr-control", &[], &lhs, &rhs, started)
}

/// Termwise rewrite with the denominator family step 5 moved to 4: the
/// n = 1 term first diverges at q^5.
pub fn mutated_rr_rewrite(order: usize) -> IdentityReport {
    let started = Instant::now();
    let mut first: Option<Mismatch> = None;
    let mut n = 0usize;
    while n * n <= order {
        let lhs = rewrite_lhs_term(n, order);
        let rhs = rewrite_rhs_term(n, order, 4);
        if let Some((exponent, l, r)) = lhs.first_mismatch(&rhs) {
            first = Some(Mismatch {
                exponent,
                lhs: l,
                rhs: r,
            });
            break;
        }
        n += 1;
    }
    finish("rr-rewrite-control", &[], order, first, started)
}

/// Row-restricted Cauchy sum against the product with residue 4 moved to
/// 3; same q^3 witness as the plain identity control.
pub fn mutated_cauchy(order: usize) -> IdentityReport {
    let started = Instant::now();
    let x = Alphabet::geometric(0, 5);
    let y = Alphabet::finite_exponents(&[1, 4]);
    let lhs = restricted_cauchy_sum(&x, &y, order, 2);
    let rhs = inverse_pochhammer_product(&[(1, 5), (3, 5)], order);
    report_from_series("cauchy-control", &[], &lhs, &rhs, started)
}

/// Third table row checked against q^2/(1−q^5) instead of q^3/(1−q^5):
/// the class is empty at weight 2, so the mismatch lands there.
pub fn mutated_table1(order: usize) -> IdentityReport {
    let started = Instant::now();
    let counts = table1_subclass_counts(order);
    let mismatch = counts[4]
        .first_mismatch(&numerator_over_q5(&[2], order))
        .map(|(exponent, lhs, rhs)| Mismatch { exponent, lhs, rhs });
    finish("table1-control", &[], order, mismatch, started)
}

/// The A = 4 class checked against the A = 3 formula: its smallest member
/// has weight 4, so the mismatch lands at q^3.
pub fn mutated_table2(order: usize) -> IdentityReport {
    let started = Instant::now();
    let counts = table2_class_counts(order);
    let mismatch = counts[6]
        .first_mismatch(&table2_formula(3, order))
        .map(|(exponent, lhs, rhs)| Mismatch { exponent, lhs, rhs });
    finish("table2-control", &[], order, mismatch, started)
}

/// Encoded-pair counts checked against the wrong oracle (gaps ≥ 2 with
/// smallest part ≥ 2, which belongs to the other residue class): n = 1
/// has one encodable partition but no gap-2 partition with min part 2.
pub fn mutated_rsk(n_max: usize) -> IdentityReport {
    let started = Instant::now();
    let image_side = PartitionConstraint::residues(5, &[1, 4]);
    let wrong_oracle = PartitionConstraint::none().with_min_gap(2).with_min_part(2);
    let lhs: Vec<u64> = (0..=n_max).map(|n| count(n, &image_side)).collect();
    let rhs: Vec<u64> = (0..=n_max).map(|n| count(n, &wrong_oracle)).collect();
    report_from_series(
        "rsk-control",
        &[("n_max", n_max as i64)],
        &series_from_counts(&lhs),
        &series_from_counts(&rhs),
        started,
    )
}

/// Two-marker product with the y-family base moved from q^4 to q^3: the
/// x^0 y^1 coefficient diverges at q^3.
pub fn mutated_xyrr(order: usize, degree_cap: usize) -> IdentityReport {
    let started = Instant::now();
    let lhs = xyrr_product_side(order, degree_cap, 3);
    let rhs = xyrr_sum_side(order, degree_cap);
    let mismatch = lhs.first_mismatch(&rhs).map(|m| Mismatch {
        exponent: m.exponent,
        lhs: m.lhs,
        rhs: m.rhs,
    });
    finish(
        "xyrr-control",
        &[("degree_cap", degree_cap as i64)],
        order,
        mismatch,
        started,
    )
}

/// Finite q-binomial identity with the last denominator index N−M−1 moved
/// to N−M: already at N = 1, M = 0 the right side loses its (1−q) and the
/// mismatch lands at q^1.
pub fn mutated_finite(n_max: usize) -> IdentityReport {
    assert!(n_max >= 1);
    let started = Instant::now();
    let mut best: Option<Mismatch> = None;
    let mut top_degree = 0usize;
    'outer: for n in 1..=n_max {
        for m in 0..n {
            let lhs = finite_lhs(n, m);
            let rhs = finite_rhs_by_division(n, m, n - m);
            top_degree = top_degree
                .max(lhs.degree().unwrap_or(0))
                .max(rhs.degree().unwrap_or(0));
            if let Some(mm) = super::report::first_poly_mismatch(&lhs, &rhs) {
                best = Some(mm);
                break 'outer;
            }
        }
    }
    finish(
        "finite-control",
        &[("n_max", n_max as i64)],
        top_degree,
        best,
        started,
    )
}

/// General theorem at k = 1, i = 2 with A_4 = −q^3/(1−q^3) replaced by
/// −q^2/(1−q^3): the sides first disagree at q^2.
pub fn mutated_genthm(order: usize) -> IdentityReport {
    let started = Instant::now();
    let lhs = genthm_lhs(1, 2, order).expect("parameters are valid");
    let a1 = RationalFunction::new(QPoly::one(), QPoly::from_i64(&[1, 0, 0, -1]));
    let a4_mutated = RationalFunction::new(
        QPoly::from_i64(&[0, 0, -1]),
        QPoly::from_i64(&[1, 0, 0, -1]),
    );
    let mut rhs = QSeries::zero(order);
    rhs = rhs.add(
        &a1.to_series(order)
            .mul(&inverse_pochhammer_product(&[(1, 5)], order)),
    );
    rhs = rhs.add(
        &a4_mutated
            .to_series(order)
            .mul(&inverse_pochhammer_product(&[(4, 5)], order)),
    );
    report_from_series(
        "genthm-control",
        &[("k", 1), ("i", 2)],
        &lhs,
        &rhs,
        started,
    )
}

/// Proposed one-row decomposition with c_1 = 1/(1−q^2) in place of the
/// true 1/(1−q^3): the re-check first disagrees at q^2.
pub fn mutated_speculation(order: usize) -> IdentityReport {
    let terms = [
        SpeculationTerm {
            residues: vec![1],
            coefficient: RationalFunction::new(QPoly::one(), QPoly::from_i64(&[1, 0, -1])),
        },
        SpeculationTerm {
            residues: vec![4],
            coefficient: RationalFunction::new(
                QPoly::from_i64(&[0, 0, 0, -1]),
                QPoly::from_i64(&[1, 0, 0, -1]),
            ),
        },
    ];
    let mut report = check_solution(1, 2, 1, &terms, order).expect("parameters are valid");
    report.identity_name = "speculation-control".to_string();
    report
}

/// Borwein product with the second residue family started at q instead of
/// q^2: at n = 1 the right side doubles its q coefficient.
pub fn mutated_borwein(n_max: usize, order: usize) -> IdentityReport {
    assert!(n_max >= 1);
    let started = Instant::now();
    let mut best: Option<Mismatch> = None;
    for n in 0..=n_max {
        let lhs = borwein_lhs(n, order);
        let rhs = borwein_rhs(n, order, 1);
        if let Some((exponent, l, r)) = lhs.first_mismatch(&rhs) {
            best = Some(Mismatch {
                exponent,
                lhs: l,
                rhs: r,
            });
            break;
        }
    }
    finish(
        "borwein-control",
        &[("n_max", n_max as i64)],
        order,
        best,
        started,
    )
}

/// Gap condition tightened from 2 to 3 against the mod-5 residue count:
/// n = 4 has two residue partitions but only one with gaps ≥ 3.
pub fn mutated_macmahon(n_max: usize) -> IdentityReport {
    let started = Instant::now();
    let residue_side = PartitionConstraint::residues(5, &[1, 4]);
    let gap_side = PartitionConstraint::none().with_min_gap(3);
    let lhs: Vec<u64> = (0..=n_max).map(|n| count(n, &residue_side)).collect();
    let rhs: Vec<u64> = (0..=n_max).map(|n| count(n, &gap_side)).collect();
    report_from_series(
        "macmahon-control",
        &[("n_max", n_max as i64)],
        &series_from_counts(&lhs),
        &series_from_counts(&rhs),
        started,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Status;
    use num::BigRational;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn expect_fail_at(report: &IdentityReport, exponent: usize, lhs: i64, rhs: i64) {
        assert_eq!(report.status, Status::Fail, "{report}");
        let m = report.first_mismatch.as_ref().unwrap();
        assert_eq!(
            (m.exponent, m.lhs.clone(), m.rhs.clone()),
            (exponent, rat(lhs), rat(rhs)),
            "{report}"
        );
    }

    #[test]
    fn every_control_fails_at_its_frozen_witness() {
        expect_fail_at(&mutated_rr(30), 3, 1, 2);
        expect_fail_at(&mutated_rr_rewrite(30), 5, 1, 2);
        expect_fail_at(&mutated_cauchy(30), 3, 1, 2);
        expect_fail_at(&mutated_table1(30), 2, 0, 1);
        expect_fail_at(&mutated_table2(30), 3, 0, 1);
        expect_fail_at(&mutated_rsk(20), 1, 1, 0);
        expect_fail_at(&mutated_xyrr(20, 4), 3, 1, 0);
        expect_fail_at(&mutated_finite(10), 1, -1, 0);
        expect_fail_at(&mutated_genthm(30), 2, 1, 0);
        expect_fail_at(&mutated_speculation(30), 2, 1, 2);
        expect_fail_at(&mutated_borwein(4, 20), 1, -1, -2);
        expect_fail_at(&mutated_macmahon(20), 4, 2, 1);
    }
}
