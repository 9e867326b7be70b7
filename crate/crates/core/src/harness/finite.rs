//! The finite q-binomial identity behind the two-row decomposition:
//!   Σ_{a=0}^{M} [N,a]_q (q^a − q^{N−a}) = (q;q)_N / ((q;q)_M (q;q)_{N−M−1})
//! as exact polynomials, for all 1 ≤ N ≤ N_max and 0 ≤ M ≤ N−1.

use std::time::Instant;

use num::BigRational;

use crate::qseries::{gauss_binomial_poly, gauss_binomial_row, poch_finite_poly, QPoly};

use super::report::{finish, first_poly_mismatch, IdentityReport, Mismatch};

fn one() -> BigRational {
    BigRational::from_integer(1.into())
}

pub(crate) fn finite_lhs(n: usize, m: usize) -> QPoly {
    let mut acc = QPoly::zero();
    for a in 0..=m {
        let bin = gauss_binomial_poly(n, a as i64);
        let diff = QPoly::monomial(one(), a).sub(&QPoly::monomial(one(), n - a));
        acc = acc.add(&bin.mul(&diff));
    }
    acc
}

/// (q;q)_n / ((q;q)_m (q;q)_last) by exact division; panics if the ratio is
/// not a polynomial, which cannot happen for last ≤ n − m.
pub(crate) fn finite_rhs_by_division(n: usize, m: usize, last: usize) -> QPoly {
    let num = poch_finite_poly(1, 1, n);
    let den = poch_finite_poly(1, 1, m).mul(&poch_finite_poly(1, 1, last));
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "pochhammer ratio must divide exactly");
    quot
}

/// Same value as finite_rhs_by_division(n, m, n−m−1), via the q-binomial:
/// (q;q)_N/((q;q)_M (q;q)_{N−M−1}) = [N−1,M]_q (1 − q^N). The verification
/// loop inlines this form row by row; tests keep the spelled-out version.
#[cfg(test)]
fn finite_rhs(n: usize, m: usize) -> QPoly {
    let factor = QPoly::one().sub(&QPoly::monomial(one(), n));
    gauss_binomial_poly(n - 1, m as i64).mul(&factor)
}

pub fn verify_finite_identity(n_max: usize) -> IdentityReport {
    assert!(n_max >= 1);
    let started = Instant::now();
    let mut best: Option<Mismatch> = None;
    let mut top_degree = 0usize;
    // Share one binomial row per N and grow the left side incrementally
    // in M; recomputing every [N,a]_q per pair is quadratically slower.
    let mut prev_row = vec![QPoly::one()];
    'outer: for n in 1..=n_max {
        let row = gauss_binomial_row(n);
        let factor = QPoly::one().sub(&QPoly::monomial(one(), n));
        let mut lhs = QPoly::zero();
        for m in 0..n {
            let diff = QPoly::monomial(one(), m).sub(&QPoly::monomial(one(), n - m));
            lhs = lhs.add(&row[m].mul(&diff));
            let rhs = prev_row[m].mul(&factor);
            top_degree = top_degree
                .max(lhs.degree().unwrap_or(0))
                .max(rhs.degree().unwrap_or(0));
            if let Some(mm) = first_poly_mismatch(&lhs, &rhs) {
                best = Some(mm);
                break 'outer;
            }
        }
        prev_row = row;
    }
    finish(
        "finite",
        &[("n_max", n_max as i64)],
        top_degree,
        best,
        started,
    )
}
