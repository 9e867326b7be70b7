//! Bijectivity check for the mod-5 tableau encoding: for every n ≤ n_max,
//! the encoded pairs are valid, distinct, weight-preserving, decode back to
//! their partitions, and are counted by an independent enumeration of
//! same-shape tableau pairs (P over multiples of 5, Q over {1,4}, at most
//! two rows).

use std::collections::HashSet;
use std::time::Instant;

use crate::partitions::{count, generate, PartitionConstraint};
use crate::qseries::QSeries;
use crate::rsk::{partition_to_pq, pq_to_partition};
use crate::tableaux::{validate, weight_genfun, Alphabet};
use crate::Partition;

use super::report::{finish, series_from_counts, IdentityReport, Mismatch};

/// Weight series of all valid pairs, by direct tableau enumeration: for
/// every shape with at most two rows, the product of the P-side and Q-side
/// weight generating functions.
pub(crate) fn pair_count_series(order: usize) -> QSeries {
    let p_alpha = Alphabet::geometric(0, 5);
    let q_alpha = Alphabet::finite_exponents(&[1, 4]);
    let mut sum = QSeries::one(order); // empty shape: one empty pair
    // minimal pair weight of shape (l1, l2) is 1*l1 + (5+4)*l2
    for l1 in 1..=order {
        for l2 in 0..=l1 {
            if l1 + 9 * l2 > order {
                break;
            }
            let mut parts = vec![l1];
            if l2 > 0 {
                parts.push(l2);
            }
            let shape = Partition::new(parts);
            let wp = weight_genfun(&shape, &p_alpha, order);
            let wq = weight_genfun(&shape, &q_alpha, order);
            sum = sum.add(&wp.mul(&wq));
        }
    }
    sum
}

pub fn verify_proposition_rsk(n_max: usize) -> IdentityReport {
    let started = Instant::now();
    let c = PartitionConstraint::residues(5, &[1, 4]);
    let mut structural: Option<Mismatch> = None;
    let mut counts = Vec::with_capacity(n_max + 1);

    'outer: for n in 0..=n_max {
        let parts = generate(n, &c);
        let mut images = HashSet::new();
        for part in &parts {
            let ok = match partition_to_pq(part) {
                Ok(pq) => {
                    validate(&pq.p)
                        && validate(&pq.q)
                        && pq.p.shape() == pq.q.shape()
                        && pq.p.rows().len() <= 2
                        && pq.p.entry_sum() + pq.q.entry_sum() == n
                        && pq_to_partition(&pq).as_ref() == Ok(part)
                        && images.insert((pq.p.rows().to_vec(), pq.q.rows().to_vec()))
                }
                Err(_) => false,
            };
            if !ok {
                // a broken or duplicated image: witness by count at this weight
                structural = Some(Mismatch {
                    exponent: n,
                    lhs: num::BigRational::from_integer((parts.len() as i64).into()),
                    rhs: num::BigRational::from_integer((images.len() as i64).into()),
                });
                break 'outer;
            }
        }
        counts.push(count(n, &c));
    }

    let mismatch = structural.or_else(|| {
        let lhs = series_from_counts(&counts);
        let rhs = pair_count_series(n_max);
        lhs.first_mismatch(&rhs)
            .map(|(exponent, lhs, rhs)| Mismatch { exponent, lhs, rhs })
    });
    finish("rsk", &[("n_max", n_max as i64)], n_max, mismatch, started)
}
