//! MacMahon-style equinumerosity behind both Rogers-Ramanujan identities,
//! checked by direct counting: partitions into parts ≡ 1,4 (mod 5) match
//! partitions with gaps ≥ 2, and parts ≡ 2,3 (mod 5) match gaps ≥ 2 with
//! smallest part ≥ 2, for every n up to n_max.

use std::time::Instant;

use crate::partitions::{count, PartitionConstraint};

use super::report::{finish, IdentityReport, Mismatch};

pub fn verify_macmahon(n_max: usize) -> IdentityReport {
    let started = Instant::now();
    let pairs = [
        (
            PartitionConstraint::residues(5, &[1, 4]),
            PartitionConstraint::none().with_min_gap(2),
        ),
        (
            PartitionConstraint::residues(5, &[2, 3]),
            PartitionConstraint::none().with_min_gap(2).with_min_part(2),
        ),
    ];
    let mut best: Option<Mismatch> = None;
    for (residue_side, gap_side) in &pairs {
        for n in 0..=n_max {
            let lhs = count(n, residue_side);
            let rhs = count(n, gap_side);
            if lhs != rhs {
                let m = Mismatch {
                    exponent: n,
                    lhs: num::BigRational::from_integer(lhs.into()),
                    rhs: num::BigRational::from_integer(rhs.into()),
                };
                if best.as_ref().is_none_or(|b| n < b.exponent) {
                    best = Some(m);
                }
                break;
            }
        }
    }
    finish("macmahon", &[("n_max", n_max as i64)], n_max, best, started)
}
