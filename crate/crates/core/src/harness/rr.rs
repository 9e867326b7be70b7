//! The two Rogers-Ramanujan identities:
//!   Σ q^{n²}  /(q;q)_n = 1/((q;q^5)_∞ (q^4;q^5)_∞)
//!   Σ q^{n²+n}/(q;q)_n = 1/((q^2;q^5)_∞ (q^3;q^5)_∞)

use std::time::Instant;

use crate::qseries::{FactoredProduct, QSeries};

use super::report::{report_from_series, IdentityReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RrWhich {
    First,
    Second,
}

/// Σ_{n≥0} q^{n²+extra·n}/(q;q)_n, truncated once the leading exponent
/// passes the order. Each term is expanded in the window it can reach.
pub(crate) fn rr_sum(extra: usize, order: usize) -> QSeries {
    let mut sum = QSeries::one(order);
    let mut n = 1usize;
    loop {
        let min = n * n + extra * n;
        if min > order {
            break;
        }
        let mut term = QSeries::one(order - min);
        for j in 1..=n {
            term.div_one_minus_qe(j);
        }
        sum = sum.add(&term.shift_up(min));
        n += 1;
    }
    sum
}

/// Π 1/(q^a;q^m)_∞ over the given (a, m) families.
pub(crate) fn inverse_pochhammer_product(families: &[(usize, usize)], order: usize) -> QSeries {
    let mut fp = FactoredProduct::one();
    for &(a, m) in families {
        fp = fp.mul(&FactoredProduct::poch_infinite(a, m).inv());
    }
    fp.expand(order).expect("inverse pochhammers have shift 0")
}

pub fn verify_rr(which: RrWhich, order: usize) -> IdentityReport {
    let started = Instant::now();
    let (name, extra, residues) = match which {
        RrWhich::First => ("rr-first", 0, (1usize, 4usize)),
        RrWhich::Second => ("rr-second", 1, (2, 3)),
    };
    let lhs = rr_sum(extra, order);
    let rhs = inverse_pochhammer_product(&[(residues.0, 5), (residues.1, 5)], order);
    report_from_series(name, &[], &lhs, &rhs, started)
}
