//! The general one-row theorem. For k ≥ 1 and a residue 1 ≤ i ≤ 2k+2 not
//! equal to its mirror 2k+3−i, let M = 2k+3 and
//! J = {1,…,2k+2} \ {i, 2k+3−i}. With the alphabet y = (q^j)_{j∈J},
//!
//!   Σ_{N≥0} h_N(y) / (q^M;q^M)_N  =  Σ_{p∈J} A_p / (q^p;q^M)_∞,
//!
//! where A_p = Π_{j∈J, j≠p} 1/(1 − q^{j−p}). The A_p come out of a partial
//! fraction expansion, so they also satisfy Σ_p A_p q^{pN} = h_N(y) row by
//! row; verify_genthm checks that too for the first few rows.

use std::time::Instant;

use crate::qseries::{FactoredProduct, QSeries, RationalFunction};
use crate::schur::h_table;
use crate::tableaux::Alphabet;

use super::report::{finish, report_from_series, IdentityReport, Mismatch};
use super::HarnessError;

/// Residue set J = {1,…,2k+2} minus {i, 2k+3−i}, in increasing order.
pub fn genthm_j_set(k: usize, i: usize) -> Result<Vec<usize>, HarnessError> {
    if k < 1 {
        return Err(HarnessError::InvalidParams(format!(
            "k must be at least 1, got {k}"
        )));
    }
    let top = 2 * k + 2;
    if i < 1 || i > top {
        return Err(HarnessError::InvalidParams(format!(
            "i must satisfy 1 <= i <= {top}, got {i}"
        )));
    }
    let mirror = 2 * k + 3 - i;
    if i == mirror {
        return Err(HarnessError::InvalidParams(format!(
            "i = {i} equals its mirror residue {mirror}"
        )));
    }
    Ok((1..=top).filter(|&j| j != i && j != mirror).collect())
}

/// A_p for every p in J, as normalized symbolic products. Factors with
/// j < p enter with negative exponent and normalize to a sign, a shift
/// q^{p−j} and the factor (1−q^{p−j}) downstairs.
pub(crate) fn genthm_coefficient_products(
    k: usize,
    i: usize,
) -> Result<Vec<(usize, FactoredProduct)>, HarnessError> {
    let j_set = genthm_j_set(k, i)?;
    Ok(j_set
        .iter()
        .map(|&p| {
            let mut a = FactoredProduct::one();
            for &j in &j_set {
                if j != p {
                    a.mul_factor(j as i64 - p as i64, -1);
                }
            }
            (p, a.normalize())
        })
        .collect())
}

/// A_p for every p in J, as exact rational functions.
pub fn genthm_coefficients(
    k: usize,
    i: usize,
) -> Result<Vec<(usize, RationalFunction)>, HarnessError> {
    let products = genthm_coefficient_products(k, i)?;
    Ok(products
        .into_iter()
        .map(|(p, fp)| {
            // Finite factors only, and the normalized shift Σ_{j<p}(p−j)
            // is nonnegative, so the rational form always exists.
            let rf = fp
                .to_rational_function()
                .expect("A_p is a finite product with nonnegative shift");
            (p, rf)
        })
        .collect())
}

pub(crate) fn genthm_lhs(k: usize, i: usize, order: usize) -> Result<QSeries, HarnessError> {
    let j_set = genthm_j_set(k, i)?;
    let m = 2 * k + 3;
    let y = Alphabet::finite_exponents(&j_set);
    // h_N has minimal weight N·min(J), so rows past order/min(J) vanish.
    let n_max = order / j_set[0];
    let h = h_table(&y, n_max, order);
    let mut inv_poch = QSeries::one(order);
    let mut acc = h[0].clone();
    for (n, h_n) in h.iter().enumerate().skip(1) {
        inv_poch.div_one_minus_qe(m * n);
        acc = acc.add(&h_n.mul(&inv_poch));
    }
    Ok(acc)
}

pub(crate) fn genthm_rhs(k: usize, i: usize, order: usize) -> Result<QSeries, HarnessError> {
    let m = 2 * k + 3;
    let products = genthm_coefficient_products(k, i)?;
    let mut acc = QSeries::zero(order);
    for (p, a) in &products {
        let mut term = a.expand(order).expect("A_p has nonnegative shift");
        let mut e = *p;
        while e <= order {
            term.div_one_minus_qe(e);
            e += m;
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Σ_p A_p q^{pN} = h_N(y) for N = 0..=rows, as truncated series; returns
/// the first disagreement if any row fails.
fn coefficient_row_mismatch(
    k: usize,
    i: usize,
    order: usize,
    rows: usize,
) -> Result<Option<Mismatch>, HarnessError> {
    let j_set = genthm_j_set(k, i)?;
    let y = Alphabet::finite_exponents(&j_set);
    let expansions: Vec<(usize, QSeries)> = genthm_coefficient_products(k, i)?
        .iter()
        .map(|(p, a)| (*p, a.expand(order).expect("A_p has nonnegative shift")))
        .collect();
    let h = h_table(&y, rows, order);
    for (n, h_n) in h.iter().enumerate() {
        let mut sum = QSeries::zero(order);
        for (p, a) in &expansions {
            sum = sum.add(&a.shift_trunc(p * n));
        }
        if let Some((exponent, lhs, rhs)) = sum.first_mismatch(h_n) {
            return Ok(Some(Mismatch { exponent, lhs, rhs }));
        }
    }
    Ok(None)
}

pub fn verify_genthm(k: usize, i: usize, order: usize) -> Result<IdentityReport, HarnessError> {
    let started = Instant::now();
    let lhs = genthm_lhs(k, i, order)?;
    let rhs = genthm_rhs(k, i, order)?;
    let params = [("k", k as i64), ("i", i as i64)];
    let mut report = report_from_series("genthm", &params, &lhs, &rhs, started);
    if report.passed() {
        if let Some(mm) = coefficient_row_mismatch(k, i, order, 10)? {
            report = finish("genthm", &params, order, Some(mm), started);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Status;
    use crate::qseries::QPoly;

    #[test]
    fn residue_set_drops_i_and_mirror() {
        assert_eq!(genthm_j_set(1, 2).unwrap(), vec![1, 4]);
        assert_eq!(genthm_j_set(1, 1).unwrap(), vec![2, 3]);
        assert_eq!(genthm_j_set(2, 2).unwrap(), vec![1, 3, 4, 6]);
        assert_eq!(genthm_j_set(3, 2).unwrap(), vec![1, 3, 4, 5, 6, 8]);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(matches!(
            genthm_j_set(0, 1),
            Err(HarnessError::InvalidParams(_))
        ));
        assert!(matches!(
            genthm_j_set(1, 0),
            Err(HarnessError::InvalidParams(_))
        ));
        assert!(matches!(
            genthm_j_set(1, 5),
            Err(HarnessError::InvalidParams(_))
        ));
    }

    #[test]
    fn first_rr_coefficients_in_closed_form() {
        // k=1, i=2: J = {1,4}, A_1 = 1/(1-q^3), A_4 = -q^3/(1-q^3).
        let coeffs = genthm_coefficients(1, 2).unwrap();
        assert_eq!(coeffs.len(), 2);
        let a1 = RationalFunction::new(QPoly::one(), QPoly::from_i64(&[1, 0, 0, -1]));
        let a4 = RationalFunction::new(
            QPoly::from_i64(&[0, 0, 0, -1]),
            QPoly::from_i64(&[1, 0, 0, -1]),
        );
        assert_eq!(coeffs[0].0, 1);
        assert!(coeffs[0].1.equivalent(&a1));
        assert_eq!(coeffs[1].0, 4);
        assert!(coeffs[1].1.equivalent(&a4));
    }

    #[test]
    fn coefficients_sum_to_one() {
        // Row N = 0 of the partial fraction expansion: Σ_p A_p = 1.
        for (k, i) in [(1, 1), (1, 2), (2, 2), (3, 4)] {
            let coeffs = genthm_coefficients(k, i).unwrap();
            let order = 40;
            let mut total = QSeries::zero(order);
            for (_, rf) in &coeffs {
                total = total.add(&rf.to_series(order));
            }
            assert_eq!(total, QSeries::one(order), "k={k} i={i}");
        }
    }

    #[test]
    fn lhs_matches_rhs_for_first_rr_pair() {
        let r = verify_genthm(1, 2, 60).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r = verify_genthm(1, 1, 60).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn second_modulus_family_passes() {
        let r = verify_genthm(2, 2, 40).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
        let r = verify_genthm(3, 2, 40).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn lhs_counts_weighted_pairs_for_k1_i2() {
        // The N-th summand pairs a size-N multiset over {1, 4} with a
        // partition into multiples of 5 no larger than 5N, so the series
        // counts such pairs by total weight. Counting them directly with
        // the partition DP gives an oracle independent of the series
        // arithmetic. (Note this is NOT the plain mod-5 residue count:
        // at n = 10 there are 5 pairs but 6 residue partitions.)
        use crate::partitions::{count, PartitionConstraint};
        let order = 25;
        let lhs = genthm_lhs(1, 2, order).unwrap();
        for n in 0..=order {
            let mut pairs = 0u64;
            for b in 0..=n / 4 {
                for a in 0..=(n - 4 * b) {
                    let rest = n - a - 4 * b;
                    let c = PartitionConstraint::residues(5, &[0]).with_max_part(5 * (a + b));
                    pairs += count(rest, &c);
                }
            }
            assert_eq!(
                *lhs.coeff(n),
                num::BigRational::from_integer(pairs.into()),
                "n={n}"
            );
        }
    }

    #[test]
    fn invalid_parameters_surface_from_verify() {
        assert!(verify_genthm(1, 9, 10).is_err());
    }
}
