//! Row-restricted Cauchy identity over a geometric x-alphabet and a finite
//! unsigned y-alphabet:
//!   Σ_{λ: rows ≤ max_rows} s_λ(x) s_λ(y) = Π_{i,j} 1/(1 − x_i y_j)
//! The product collapses to Π_j 1/(q^{c_j+b}; q^m)_∞ and the sum is finite
//! at each order because every shape has a positive minimum weight.

use std::time::Instant;

use crate::qseries::QSeries;
use crate::schur::{schur, Strategy};
use crate::tableaux::Alphabet;
use crate::Partition;

use super::report::{report_from_series, IdentityReport};
use super::rr::inverse_pochhammer_product;

/// Ascending exponent list of an unsigned finite alphabet.
pub(crate) fn finite_sorted_exponents(y: &Alphabet) -> Vec<usize> {
    match y {
        Alphabet::Finite(letters) => {
            assert!(
                letters.iter().all(|l| l.sign > 0),
                "restricted Cauchy sums need an unsigned y-alphabet"
            );
            let mut c: Vec<usize> = letters.iter().map(|l| l.exponent).collect();
            c.sort_unstable();
            c
        }
        Alphabet::Geometric { .. } => panic!("y-alphabet must be finite"),
    }
}

/// Visit every nonempty partition λ (weakly decreasing parts) with at most
/// `weights.len()` rows such that Σ_i weights[i]·λ_i ≤ budget. `weights[i]`
/// is the minimal single-cell weight in row i, so the bound is exactly
/// "some tableau pair of shape λ reaches the order".
pub(crate) fn visit_bounded_shapes(
    weights: &[usize],
    budget: usize,
    f: &mut impl FnMut(&[usize]),
) {
    fn rec(
        weights: &[usize],
        row: usize,
        prev: usize,
        left: usize,
        parts: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if row == weights.len() {
            return;
        }
        let w = weights[row];
        let hi = prev.min(left / w);
        for part in 1..=hi {
            parts.push(part);
            f(parts);
            rec(weights, row + 1, part, left - w * part, parts, f);
            parts.pop();
        }
    }
    if weights.is_empty() {
        return;
    }
    assert!(weights.iter().all(|&w| w >= 1), "row weights must be positive");
    rec(weights, 0, usize::MAX, budget, &mut Vec::new(), f);
}

/// Σ_{λ: rows ≤ max_rows} s_λ(x)·s_λ(y) truncated at order. Rows beyond
/// |y| contribute nothing, so the effective row bound is min(max_rows, |y|).
pub(crate) fn restricted_cauchy_sum(
    x: &Alphabet,
    y: &Alphabet,
    order: usize,
    max_rows: usize,
) -> QSeries {
    let (base, step) = match x {
        Alphabet::Geometric { base, step } => (*base, *step),
        Alphabet::Finite(_) => panic!("x-alphabet must be geometric"),
    };
    let c = finite_sorted_exponents(y);
    let rows = max_rows.min(c.len());
    let weights: Vec<usize> = (0..rows).map(|i| base + step * i + c[i]).collect();
    let mut sum = QSeries::one(order);
    visit_bounded_shapes(&weights, order, &mut |parts| {
        let shape = Partition::new(parts.to_vec());
        let sx = schur(&shape, x, order, Strategy::ClosedForm)
            .expect("geometric alphabet has a closed form");
        let sy = schur(&shape, y, order, Strategy::ClosedForm)
            .expect("unsigned distinct finite alphabet has a closed form");
        sum = sum.add(&sx.mul(&sy));
    });
    sum
}

pub fn verify_cauchy_restricted(
    x: &Alphabet,
    y: &Alphabet,
    order: usize,
    max_rows: usize,
) -> IdentityReport {
    let started = Instant::now();
    let (base, step) = match x {
        Alphabet::Geometric { base, step } => (*base, *step),
        Alphabet::Finite(_) => panic!("x-alphabet must be geometric"),
    };
    let c = finite_sorted_exponents(y);
    assert!(
        c.len() <= max_rows,
        "row restriction must admit every shape supported by the y-alphabet"
    );
    let lhs = restricted_cauchy_sum(x, y, order, max_rows);
    let families: Vec<(usize, usize)> = c.iter().map(|&cj| (cj + base, step)).collect();
    let rhs = inverse_pochhammer_product(&families, order);
    let params = [
        ("max_rows", max_rows as i64),
        ("x_base", base as i64),
        ("x_step", step as i64),
        ("y_count", c.len() as i64),
    ];
    report_from_series("cauchy", &params, &lhs, &rhs, started)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Status;
    use crate::schur::h_table;

    fn mod5_pair() -> (Alphabet, Alphabet) {
        (
            Alphabet::geometric(0, 5),
            Alphabet::finite_exponents(&[1, 4]),
        )
    }

    #[test]
    fn order_zero_is_trivial() {
        let (x, y) = mod5_pair();
        let r = verify_cauchy_restricted(&x, &y, 0, 2);
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn mod5_pair_matches_first_rr_product() {
        let (x, y) = mod5_pair();
        let r = verify_cauchy_restricted(&x, &y, 20, 2);
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn mod7_four_letter_alphabet_matches_product() {
        let x = Alphabet::geometric(0, 7);
        let y = Alphabet::finite_exponents(&[1, 3, 4, 6]);
        let r = verify_cauchy_restricted(&x, &y, 20, 4);
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn one_row_sum_matches_h_chain() {
        // independent path: Σ_N h_N(y)/(q^5;q^5)_N
        let (x, y) = mod5_pair();
        let order = 30;
        let sum = restricted_cauchy_sum(&x, &y, order, 1);
        let h = h_table(&y, order, order);
        let mut inv = QSeries::one(order);
        let mut expected = QSeries::zero(order);
        for (n, hn) in h.iter().enumerate() {
            if n > 0 {
                inv.div_one_minus_qe(5 * n);
            }
            expected = expected.add(&hn.mul(&inv));
        }
        assert_eq!(sum, expected);
    }

    #[test]
    fn shape_enumeration_respects_budget() {
        let mut shapes = Vec::new();
        visit_bounded_shapes(&[1, 9], 10, &mut |p| shapes.push(p.to_vec()));
        assert!(shapes.contains(&vec![10]));
        assert!(shapes.contains(&vec![1, 1]));
        assert!(!shapes.contains(&vec![2, 1]));
        for s in &shapes {
            let w: usize = s.iter().zip([1usize, 9]).map(|(p, w)| p * w).sum();
            assert!(w <= 10);
        }
        let mut dedup = shapes.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), shapes.len());
    }
}
