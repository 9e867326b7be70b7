//! Termwise rewrite of the first Rogers-Ramanujan sum side:
//!   q^{n²}/(q;q)_n = q^{n²} · Π_{j=1}^{n} (1+q^j+q^{2j}+q^{3j}+q^{4j}) / (q^5;q^5)_n
//! checked for every n whose leading exponent n² fits the order.

use std::time::Instant;

use crate::qseries::QSeries;

use super::report::{finish, IdentityReport, Mismatch};

/// q^{n²}/(q;q)_n expanded in its reachable window.
pub(crate) fn rewrite_lhs_term(n: usize, order: usize) -> QSeries {
    let min = n * n;
    if min > order {
        return QSeries::zero(order);
    }
    let mut t = QSeries::one(order - min);
    for j in 1..=n {
        t.div_one_minus_qe(j);
    }
    t.shift_up(min)
}

/// q^{n²}·Π_j (1+q^j+q^{2j}+q^{3j}+q^{4j}) / (q^step·1;q^step)_n with the
/// denominator family step exposed so the failure path can be exercised
/// (step = 5 is the identity).
pub(crate) fn rewrite_rhs_term(n: usize, order: usize, step: usize) -> QSeries {
    let min = n * n;
    if min > order {
        return QSeries::zero(order);
    }
    let reduced = order - min;
    let mut t = QSeries::one(reduced);
    for j in 1..=n {
        let mut block = QSeries::zero(reduced);
        for p in 0..5 {
            let e = j * p;
            if e > reduced {
                break;
            }
            block = block.add(&QSeries::monomial(
                num::BigRational::from_integer(1.into()),
                e,
                reduced,
            ));
        }
        t = t.mul(&block);
        t.div_one_minus_qe(step * j);
    }
    t.shift_up(min)
}

pub fn verify_rr_sum_rewrite(order: usize) -> IdentityReport {
    let started = Instant::now();
    let mut first: Option<Mismatch> = None;
    let mut n = 0usize;
    while n * n <= order {
        let lhs = rewrite_lhs_term(n, order);
        let rhs = rewrite_rhs_term(n, order, 5);
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
    finish("rr-rewrite", &[], order, first, started)
}
