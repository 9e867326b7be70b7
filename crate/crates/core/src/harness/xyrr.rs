//! Two-marker refinement of the first Rogers-Ramanujan identity:
//!   Σ_{a,b≥0} s_{(a+b,a)}(1,q^5,q^{10},...) · x^a y^a q^{5a+b} Σ_{k=0}^{b} x^{b-k} y^k q^{3k}
//!     = 1/((xq;q^5)_∞ (yq^4;q^5)_∞)
//! compared coefficientwise over all marker degrees α+β ≤ degree_cap.

use std::time::Instant;

use crate::qseries::{Marker, XYSeries};
use crate::schur::schur_principal_2row;

use super::report::{finish, IdentityReport, Mismatch};

/// The double sum. Every (a,b) term has constant total marker degree
/// 2a+b and q-valuation 10a+b, which bounds the enumeration.
pub(crate) fn xyrr_sum_side(order: usize, degree_cap: usize) -> XYSeries {
    let mut s = XYSeries::zero(degree_cap, order);
    for a in 0..=degree_cap / 2 {
        for b in 0..=degree_cap.saturating_sub(2 * a) {
            if 10 * a + b > order {
                break;
            }
            let base = schur_principal_2row(a, b, order);
            for k in 0..=b {
                let term = base.shift_trunc(5 * a + b + 3 * k);
                s.add_term(a + b - k, a + k, &term);
            }
        }
    }
    s
}

/// 1/((xq;q^5)_∞ (y q^{y_base};q^5)_∞); y_base = 4 is the identity, other
/// bases exist to exercise the failure path.
pub(crate) fn xyrr_product_side(order: usize, degree_cap: usize, y_base: usize) -> XYSeries {
    let xs = XYSeries::from_pochhammer_inverse(Marker::X, 1, 5, order, degree_cap);
    let ys = XYSeries::from_pochhammer_inverse(Marker::Y, y_base, 5, order, degree_cap);
    xs.mul(&ys)
}

pub fn verify_xyrr(order: usize, degree_cap: usize) -> IdentityReport {
    let started = Instant::now();
    let lhs = xyrr_product_side(order, degree_cap, 4);
    let rhs = xyrr_sum_side(order, degree_cap);
    let mismatch = lhs.first_mismatch(&rhs).map(|m| Mismatch {
        exponent: m.exponent,
        lhs: m.lhs,
        rhs: m.rhs,
    });
    finish(
        "xyrr",
        &[("degree_cap", degree_cap as i64)],
        order,
        mismatch,
        started,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::rr::inverse_pochhammer_product;
    use crate::harness::Status;
    use crate::qseries::QSeries;

    #[test]
    fn constant_terms_are_one() {
        let sum = xyrr_sum_side(12, 4);
        let prod = xyrr_product_side(12, 4, 4);
        assert_eq!(sum.coeff(0, 0), QSeries::one(12));
        assert_eq!(prod.coeff(0, 0), QSeries::one(12));
    }

    #[test]
    fn x_degree_one_coefficient() {
        // from (a,b,k) = (0,1,0): q/(1-q^5)
        let sum = xyrr_sum_side(20, 3);
        let mut expected = QSeries::monomial(num::BigRational::from_integer(1.into()), 1, 20);
        expected.div_one_minus_qe(5);
        assert_eq!(sum.coeff(1, 0), expected);
    }

    #[test]
    fn collapse_matches_first_rr_product_below_cap() {
        // dropping the markers recovers the plain product, valid up to the
        // order where discarded marker degrees first contribute
        let cap = 8;
        let sum = xyrr_sum_side(cap, cap).collapse_markers();
        let prod = inverse_pochhammer_product(&[(1, 5), (4, 5)], cap);
        assert_eq!(sum, prod);
    }

    #[test]
    fn identity_passes_moderate_order() {
        let r = verify_xyrr(30, 6);
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn mutated_y_base_fails_at_degree_zero_one() {
        let lhs = xyrr_product_side(12, 4, 3);
        let rhs = xyrr_sum_side(12, 4);
        let m = lhs.first_mismatch(&rhs).unwrap();
        assert_eq!((m.alpha, m.beta, m.exponent), (0, 1, 3));
    }
}
