//! The two classification tables for the first Rogers-Ramanujan sum side:
//! tableau pairs (P,Q) in the image of the mod-5 encoding, grouped into
//! classes whose generating functions assemble the n=1 term q/(1-q) and the
//! n=2 term q^4/((1-q)(1-q^2)).
//!
//! Every class is a pattern on (P,Q): a fixed shape, a fixed Q filling, a
//! zero-prefix of P, and one or two free multiples of 5 at the end of P's
//! row (or a free strict pair down a column). Class membership is decided
//! on the pair itself; the counts come from enumerating all encoded
//! partitions by weight.

use std::time::Instant;

use num::{BigInt, BigRational};

use crate::partitions::{generate, PartitionConstraint};
use crate::qseries::{QPoly, QSeries};
use crate::rsk::{partition_to_pq, TableauPair};

use super::report::{finish, IdentityReport, Mismatch};

/// Table of n=1 classes: single-row shape of the given length, P all zero
/// except one free multiple of 5 in the last cell, Q fixed.
const TABLE1_CLASSES: &[&[usize]] = &[
    &[1],
    &[4],
    &[1, 1],
    &[1, 4],
    &[1, 1, 1],
];

struct RowClass {
    q_row: &'static [usize],
    /// Lower bound on the first free P entry (0 or 5); the only class with
    /// a bound is the length-2 row that must stay clear of Table 1.
    min_y: usize,
    a: usize,
}

/// The 24 single-row classes of the n=2 table, in table order. P has
/// `q_row.len() - 2` leading zeros and two free multiples of 5 (y, x) with
/// y ≥ min_y. The 25th class (a strict column pair, A = 10) is handled
/// separately.
const TABLE2_ROW_CLASSES: &[RowClass] = &[
    RowClass { q_row: &[1, 1], min_y: 5, a: 12 },
    RowClass { q_row: &[1, 4], min_y: 5, a: 15 },
    RowClass { q_row: &[4, 4], min_y: 0, a: 8 },
    RowClass { q_row: &[1, 1, 4], min_y: 0, a: 6 },
    RowClass { q_row: &[1, 4, 4], min_y: 0, a: 9 },
    RowClass { q_row: &[4, 4, 4], min_y: 0, a: 12 },
    RowClass { q_row: &[1, 1, 1, 1], min_y: 0, a: 4 },
    RowClass { q_row: &[1, 1, 1, 4], min_y: 0, a: 7 },
    RowClass { q_row: &[1, 1, 4, 4], min_y: 0, a: 10 },
    RowClass { q_row: &[1, 4, 4, 4], min_y: 0, a: 13 },
    RowClass { q_row: &[4, 4, 4, 4], min_y: 0, a: 16 },
    RowClass { q_row: &[1, 1, 1, 1, 1], min_y: 0, a: 5 },
    RowClass { q_row: &[1, 1, 1, 1, 4], min_y: 0, a: 8 },
    RowClass { q_row: &[1, 1, 1, 4, 4], min_y: 0, a: 11 },
    RowClass { q_row: &[1, 1, 4, 4, 4], min_y: 0, a: 14 },
    RowClass { q_row: &[1, 1, 1, 1, 1, 1], min_y: 0, a: 6 },
    RowClass { q_row: &[1, 1, 1, 1, 1, 4], min_y: 0, a: 9 },
    RowClass { q_row: &[1, 1, 1, 1, 4, 4], min_y: 0, a: 12 },
    RowClass { q_row: &[1, 1, 1, 1, 1, 1, 1], min_y: 0, a: 7 },
    RowClass { q_row: &[1, 1, 1, 1, 1, 1, 4], min_y: 0, a: 10 },
    RowClass { q_row: &[1, 1, 1, 1, 1, 4, 4], min_y: 0, a: 13 },
    RowClass { q_row: &[1, 1, 1, 1, 1, 1, 1, 1], min_y: 0, a: 8 },
    RowClass { q_row: &[1, 1, 1, 1, 1, 1, 1, 4], min_y: 0, a: 11 },
    RowClass { q_row: &[1, 1, 1, 1, 1, 1, 4, 4], min_y: 0, a: 14 },
];

const TABLE2_COLUMN_A: usize = 10;

/// A-values of all 25 n=2 classes, in table order (column class last).
pub(crate) fn table2_a_values() -> Vec<usize> {
    let mut a: Vec<usize> = TABLE2_ROW_CLASSES.iter().map(|c| c.a).collect();
    a.push(TABLE2_COLUMN_A);
    a
}

/// Human-readable one-line descriptions of the 25 n=2 classes.
pub fn table2_class_lines() -> Vec<String> {
    let fmt_q = |q: &[usize]| {
        q.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut lines: Vec<String> = TABLE2_ROW_CLASSES
        .iter()
        .map(|c| {
            let r = c.q_row.len();
            let bound = if c.min_y > 0 {
                format!(", y >= {}", c.min_y)
            } else {
                String::new()
            };
            format!(
                "shape ({r}), P = (0^{}, y, x){bound}, Q = ({}): A = {}",
                r - 2,
                fmt_q(c.q_row),
                c.a
            )
        })
        .collect();
    lines.push(format!(
        "shape (1,1), P = (y; x) with x > y, Q = (1; 4): A = {TABLE2_COLUMN_A}"
    ));
    lines
}

fn single_row(pq: &TableauPair) -> Option<(&[usize], &[usize])> {
    if pq.p.rows().len() == 1 {
        Some((&pq.p.rows()[0], &pq.q.rows()[0]))
    } else {
        None
    }
}

/// Index into TABLE1_CLASSES, if the pair matches an n=1 class.
pub(crate) fn classify_table1(pq: &TableauPair) -> Option<usize> {
    let (p, q) = single_row(pq)?;
    let r = p.len();
    if !(1..=3).contains(&r) || p[..r - 1].iter().any(|&e| e != 0) {
        return None;
    }
    TABLE1_CLASSES.iter().position(|&cls| cls == q)
}

/// Index 0..=24 into the n=2 classes (24 = the column class).
pub(crate) fn classify_table2(pq: &TableauPair) -> Option<usize> {
    if pq.p.shape().parts() == [1, 1] {
        // Q is forced to the column (1;4) by column-strictness.
        return Some(TABLE2_ROW_CLASSES.len());
    }
    let (p, q) = single_row(pq)?;
    let r = p.len();
    if !(2..=8).contains(&r) || p[..r - 2].iter().any(|&e| e != 0) {
        return None;
    }
    TABLE2_ROW_CLASSES
        .iter()
        .position(|c| c.q_row == q && p[r - 2] >= c.min_y)
}

/// Per-class counts of encoded pairs by weight, for one classifier.
fn class_counts(
    order: usize,
    classes: usize,
    classify: impl Fn(&TableauPair) -> Option<usize>,
) -> Vec<Vec<u64>> {
    let c = PartitionConstraint::residues(5, &[1, 4]);
    let mut counts = vec![vec![0u64; order + 1]; classes];
    for n in 0..=order {
        for part in generate(n, &c) {
            let pq = partition_to_pq(&part).expect("residues are 1 or 4");
            if let Some(idx) = classify(&pq) {
                counts[idx][n] += 1;
            }
        }
    }
    counts
}

pub(crate) fn table1_subclass_counts(order: usize) -> Vec<QSeries> {
    class_counts(order, TABLE1_CLASSES.len(), classify_table1)
        .into_iter()
        .map(|c| counts_to_series(&c))
        .collect()
}

pub(crate) fn table2_class_counts(order: usize) -> Vec<QSeries> {
    class_counts(order, TABLE2_ROW_CLASSES.len() + 1, classify_table2)
        .into_iter()
        .map(|c| counts_to_series(&c))
        .collect()
}

fn counts_to_series(counts: &[u64]) -> QSeries {
    let coeffs: Vec<BigRational> = counts
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    QSeries::new(coeffs, counts.len() - 1)
}

/// q^{e1} + q^{e2} + ... over 1/(1-q^5), expanded.
pub(crate) fn numerator_over_q5(exponents: &[usize], order: usize) -> QSeries {
    let mut num = QSeries::zero(order);
    for &e in exponents {
        if e <= order {
            num = num.add(&QSeries::monomial(
                BigRational::from_integer(1.into()),
                e,
                order,
            ));
        }
    }
    num.div_one_minus_qe(5);
    num
}

/// q^a / ((1-q^5)(1-q^10)), expanded.
pub(crate) fn table2_formula(a: usize, order: usize) -> QSeries {
    let mut s = QSeries::monomial(BigRational::from_integer(1.into()), a, order);
    s.div_one_minus_qe(5);
    s.div_one_minus_qe(10);
    s
}

fn merge_mismatch(best: &mut Option<Mismatch>, candidate: Option<(usize, BigRational, BigRational)>) {
    if let Some((exponent, lhs, rhs)) = candidate {
        let better = best.as_ref().is_none_or(|b| exponent < b.exponent);
        if better {
            *best = Some(Mismatch { exponent, lhs, rhs });
        }
    }
}

pub fn verify_table1(order: usize) -> IdentityReport {
    let started = Instant::now();
    let counts = table1_subclass_counts(order);
    let mut best: Option<Mismatch> = None;

    // table rows merge the Q choices of equal length
    let rows = [
        (counts[0].add(&counts[1]), &[1usize, 4][..]),
        (counts[2].add(&counts[3]), &[2, 5][..]),
        (counts[4].clone(), &[3][..]),
    ];
    for (got, numerator) in &rows {
        merge_mismatch(&mut best, got.first_mismatch(&numerator_over_q5(numerator, order)));
    }

    // the rows sum to the n=1 sum-side term q/(1-q)
    let mut total = QSeries::zero(order);
    for (got, _) in &rows {
        total = total.add(got);
    }
    let mut geo = QSeries::one(order.saturating_sub(1));
    geo.div_one_minus_qe(1);
    merge_mismatch(&mut best, total.first_mismatch(&geo.shift_up(1)));

    finish("table1", &[], order, best, started)
}

pub fn verify_table2(order: usize) -> IdentityReport {
    let started = Instant::now();
    let counts = table2_class_counts(order);
    let a_values = table2_a_values();
    let mut best: Option<Mismatch> = None;

    for (got, &a) in counts.iter().zip(&a_values) {
        merge_mismatch(&mut best, got.first_mismatch(&table2_formula(a, order)));
    }

    // the classes sum to the n=2 sum-side term q^4/((1-q)(1-q^2))
    let mut total = QSeries::zero(order);
    for got in &counts {
        total = total.add(got);
    }
    let mut term = QSeries::monomial(BigRational::from_integer(1.into()), 4, order);
    term.div_one_minus_qe(1);
    term.div_one_minus_qe(2);
    merge_mismatch(&mut best, total.first_mismatch(&term));

    // the A-multiset reproduces the n=2 numerator exactly:
    //   Σ q^A · (1-q)(1-q^2) = q^4 (1-q^5)(1-q^10)
    let mut num = QPoly::zero();
    for &a in &a_values {
        num = num.add(&QPoly::monomial(BigRational::from_integer(1.into()), a));
    }
    let lhs_poly = num
        .mul(&QPoly::from_i64(&[1, -1]))
        .mul(&QPoly::from_i64(&[1, 0, -1]));
    let mut rhs_poly = QPoly::monomial(BigRational::from_integer(1.into()), 4);
    let mut q5 = vec![0i64; 6];
    q5[0] = 1;
    q5[5] = -1;
    let mut q10 = vec![0i64; 11];
    q10[0] = 1;
    q10[10] = -1;
    rhs_poly = rhs_poly.mul(&QPoly::from_i64(&q5)).mul(&QPoly::from_i64(&q10));
    if let Some(m) = super::report::first_poly_mismatch(&lhs_poly, &rhs_poly) {
        merge_mismatch(&mut best, Some((m.exponent, m.lhs, m.rhs)));
    }

    // and the A-multiset histogram matches these coefficients verbatim
    let expected = QPoly::from_i64(&[0, 0, 0, 0, 1, 1, 2, 2, 3, 2, 3, 2, 3, 2, 2, 1, 1]);
    if let Some(m) = super::report::first_poly_mismatch(&num, &expected) {
        merge_mismatch(&mut best, Some((m.exponent, m.lhs, m.rhs)));
    }

    finish("table2", &[], order, best, started)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Status;
    use crate::Partition;

    #[test]
    fn class_tables_are_well_formed() {
        assert_eq!(TABLE2_ROW_CLASSES.len() + 1, 25);
        for c in TABLE2_ROW_CLASSES {
            // A = sum of Q entries plus the minimal free-pair weight
            let qsum: usize = c.q_row.iter().sum();
            assert_eq!(c.a, qsum + 2 * c.min_y, "{:?}", c.q_row);
            assert!(c.q_row.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn classifiers_are_disjoint_and_weight_consistent() {
        let c = PartitionConstraint::residues(5, &[1, 4]);
        for n in 0..=40 {
            for part in generate(n, &c) {
                let pq = partition_to_pq(&part).unwrap();
                let t1 = classify_table1(&pq);
                let t2 = classify_table2(&pq);
                assert!(
                    t1.is_none() || t2.is_none(),
                    "pair of weight {n} matched both tables"
                );
            }
        }
    }

    #[test]
    fn smallest_members_hit_their_a_values() {
        // weight-4 member of the A=4 class: P=(0,0,0,0), Q=(1,1,1,1)
        let p = partition_to_pq(&Partition::new(vec![1, 1, 1, 1])).unwrap();
        assert_eq!(classify_table2(&p), Some(6));
        // weight-10 member of the column class comes from (6,4):
        // biword (1,5),(4,0) -> P=(0;5), Q=(1;4)
        let p = partition_to_pq(&Partition::new(vec![6, 4])).unwrap();
        assert_eq!(classify_table2(&p), Some(24));
    }

    #[test]
    fn table1_passes() {
        let r = verify_table1(40);
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn table2_passes() {
        let r = verify_table2(40);
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn class_lines_list_all_classes() {
        let lines = table2_class_lines();
        assert_eq!(lines.len(), 25);
        assert!(lines[0].contains("A = 12"));
        assert!(lines[24].contains("A = 10"));
    }
}
