//! The Robinson-Schensted-Knuth correspondence on sorted biwords, and
//! the specific encoding of partitions with parts ≡ 1,4 (mod 5) as
//! column-strict tableau pairs: record letters live in {1,4}, insert
//! letters are multiples of 5, so P has entries ≡ 0 (mod 5) and Q has
//! entries in {1,4}, with at most two rows.
//!
//! Provides:
//!   Biword            sorted (record, insert) pairs
//!   TableauPair       same-shape (P, Q)
//!   rsk_forward       row insertion with strictly-greater bumping
//!   rsk_inverse       reverse bumping, largest record letter first
//!   partition_to_pq   mod-5 decomposition followed by rsk_forward
//!   pq_to_partition   the inverse encoding

use std::error::Error;
use std::fmt;

use crate::partitions::{mod5_decompose, Partition, PartitionError};
use crate::tableaux::{validate, Tableau};

/// Lexicographically sorted biword: record letters weakly increase, and
/// insert letters weakly increase among equal record letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biword {
    pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RskError {
    UnsortedBiword,
    ShapeMismatch,
    InvalidTableau(&'static str),
    /// A named domain condition of the mod-5 encoding failed.
    DomainViolation(String),
    BadResidue { part: usize },
}

impl fmt::Display for RskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RskError::UnsortedBiword => write!(f, "biword pairs are not sorted lexicographically"),
            RskError::ShapeMismatch => write!(f, "P and Q have different shapes"),
            RskError::InvalidTableau(what) => write!(f, "invalid tableau: {what}"),
            RskError::DomainViolation(cond) => write!(f, "domain violation: {cond}"),
            RskError::BadResidue { part } => {
                write!(f, "part {part} is not congruent to 1 or 4 mod 5")
            }
        }
    }
}

impl Error for RskError {}

impl From<PartitionError> for RskError {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::BadResidue { part } => RskError::BadResidue { part },
        }
    }
}

impl Biword {
    /// Checked constructor; the pairs must already be sorted.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self, RskError> {
        if pairs.windows(2).any(|w| w[0] > w[1]) {
            return Err(RskError::UnsortedBiword);
        }
        Ok(Biword { pairs })
    }

    pub fn from_unsorted(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Biword { pairs }
    }

    pub fn empty() -> Self {
        Biword { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Σ (record + insert), the weight the correspondence preserves.
    pub fn weight(&self) -> usize {
        self.pairs.iter().map(|&(r, i)| r + i).sum()
    }
}

/// Insertion tableau P and recording tableau Q of equal shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

/// Row-insert every insert letter into P (an incoming value displaces
/// the leftmost entry strictly greater than it; the displaced entry
/// recurses into the next row), recording each growth cell in Q with the
/// paired record letter. The biword type guarantees sortedness, which is
/// what makes both outputs column-strict.
pub fn rsk_forward(w: &Biword) -> TableauPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for &(record, insert) in w.pairs() {
        let mut carry = insert;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![record]);
                break;
            }
            // leftmost entry strictly greater than carry
            let idx = p[row].partition_point(|&x| x <= carry);
            if idx == p[row].len() {
                p[row].push(carry);
                q[row].push(record);
                break;
            }
            std::mem::swap(&mut p[row][idx], &mut carry);
            row += 1;
        }
    }
    let pair = TableauPair {
        p: Tableau::new(p),
        q: Tableau::new(q),
    };
    debug_assert!(validate(&pair.p) && validate(&pair.q));
    pair
}

/// Inverse correspondence: repeatedly remove the rightmost cell holding
/// the largest record letter of Q (always a removable corner of a
/// column-strict tableau) and reverse-bump the corresponding P entry up
/// through the rows; in each row the incoming value displaces the
/// rightmost entry strictly smaller than it.
pub fn rsk_inverse(pq: &TableauPair) -> Result<Biword, RskError> {
    if pq.p.shape() != pq.q.shape() {
        return Err(RskError::ShapeMismatch);
    }
    if !validate(&pq.p) {
        return Err(RskError::InvalidTableau("P is not column-strict"));
    }
    if !validate(&pq.q) {
        return Err(RskError::InvalidTableau("Q is not column-strict"));
    }
    let mut p: Vec<Vec<usize>> = pq.p.rows().to_vec();
    let mut q: Vec<Vec<usize>> = pq.q.rows().to_vec();
    let mut reversed = Vec::new();
    while !q.is_empty() {
        // Rightmost occurrence of the maximal record letter: equal Q
        // entries occupy distinct columns, so the rightmost is unique.
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in q.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let better = match best {
                    None => true,
                    Some((br, bc)) => {
                        let bv = q[br][bc];
                        v > bv || (v == bv && c > bc)
                    }
                };
                if better {
                    best = Some((r, c));
                }
            }
        }
        let (r, c) = best.expect("nonempty tableau has a maximum");
        if c + 1 != q[r].len() || (r + 1 < q.len() && q[r + 1].len() > c) {
            return Err(RskError::InvalidTableau(
                "maximal record letter is not at a removable corner",
            ));
        }
        let record = q[r].pop().expect("corner exists");
        let mut carry = p[r].pop().expect("shapes match");
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        for row in (0..r).rev() {
            // rightmost entry strictly less than carry
            let idx = p[row].partition_point(|&x| x < carry);
            if idx == 0 {
                return Err(RskError::InvalidTableau(
                    "reverse bump found no smaller entry",
                ));
            }
            std::mem::swap(&mut p[row][idx - 1], &mut carry);
        }
        reversed.push((record, carry));
    }
    reversed.reverse();
    Biword::new(reversed).map_err(|_| {
        RskError::InvalidTableau("inverse produced an unsorted biword")
    })
}

/// Encode a partition with parts ≡ 1,4 (mod 5) as a tableau pair.
pub fn partition_to_pq(p: &Partition) -> Result<TableauPair, RskError> {
    let biword = mod5_decompose(p)?;
    Ok(rsk_forward(&biword))
}

/// Decode a tableau pair back to the partition: P entries must be
/// multiples of 5, Q entries in {1,4}, shapes equal with at most 2 rows.
pub fn pq_to_partition(pq: &TableauPair) -> Result<Partition, RskError> {
    if pq.p.shape() != pq.q.shape() {
        return Err(RskError::ShapeMismatch);
    }
    if !validate(&pq.p) || !validate(&pq.q) {
        return Err(RskError::InvalidTableau("not column-strict"));
    }
    if pq.p.rows().len() > 2 {
        return Err(RskError::DomainViolation(
            "shape has more than 2 rows".to_string(),
        ));
    }
    for &e in pq.p.rows().iter().flatten() {
        if e % 5 != 0 {
            return Err(RskError::DomainViolation(format!(
                "P entry {e} is not a multiple of 5"
            )));
        }
    }
    for &e in pq.q.rows().iter().flatten() {
        if e != 1 && e != 4 {
            return Err(RskError::DomainViolation(format!(
                "Q entry {e} is not 1 or 4"
            )));
        }
    }
    let biword = rsk_inverse(pq)?;
    let mut parts: Vec<usize> = biword.pairs().iter().map(|&(r, i)| r + i).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Partition::new(parts))
}
