//! The Borwein product through a dual Cauchy sum: with the alphabet
//! x = (1, q^3, …, q^{3(n−1)}),
//!
//!   Σ_λ s_λ(x) · s_{λ'}(−q, −q²)  =  (q;q³)_n (q²;q³)_n,
//!
//! where λ runs over shapes with parts ≤ 2 and length ≤ n, so λ = (2^a 1^b)
//! and λ' = (a+b, a). The signed evaluation collapses to
//! s_{λ'}(−q,−q²) = (−1)^{|λ|} s_{λ'}(q,q²), and (−1)^{|λ|} = (−1)^b.

use std::time::Instant;

use crate::partitions::Partition;
use crate::qseries::{poch_finite, QSeries};
use crate::schur::{schur, schur_dual_jacobi_trudi, Strategy};
use crate::tableaux::Alphabet;

use super::report::{finish, IdentityReport, Mismatch};

pub(crate) fn borwein_lhs(n: usize, order: usize) -> QSeries {
    let exps: Vec<usize> = (0..n).map(|i| 3 * i).collect();
    let x = Alphabet::finite_exponents(&exps);
    let y = Alphabet::finite_exponents(&[1, 2]);
    let mut acc = QSeries::zero(order);
    for a in 0..=n {
        for b in 0..=(n - a) {
            let lambda = Partition::new([vec![2; a], vec![1; b]].concat());
            let sx = schur_dual_jacobi_trudi(&lambda, &x, order);
            if sx.is_zero() {
                continue;
            }
            let conj = Partition::new([a + b, a].into_iter().filter(|&p| p > 0).collect());
            let sy = schur(&conj, &y, order, Strategy::ClosedForm)
                .expect("two distinct unsigned letters have a closed form");
            let term = sx.mul(&sy);
            acc = if b % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
    }
    acc
}

/// (q;q³)_n (q^{e2};q³)_n; the identity takes e2 = 2.
pub(crate) fn borwein_rhs(n: usize, order: usize, e2: usize) -> QSeries {
    poch_finite(1, 3, n, order).mul(&poch_finite(e2, 3, n, order))
}

pub fn verify_borwein(n_max: usize, order: usize) -> IdentityReport {
    assert!(n_max >= 1);
    let started = Instant::now();
    let mut best: Option<Mismatch> = None;
    for n in 0..=n_max {
        let lhs = borwein_lhs(n, order);
        let rhs = borwein_rhs(n, order, 2);
        if let Some((exponent, l, r)) = lhs.first_mismatch(&rhs) {
            best = Some(Mismatch {
                exponent,
                lhs: l,
                rhs: r,
            });
            break;
        }
    }
    finish("borwein", &[("n_max", n_max as i64)], order, best, started)
}
