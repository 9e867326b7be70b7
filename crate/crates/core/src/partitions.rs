//! Integer partitions under the constraint families the identity checks
//! need: residue classes mod m, minimum gap between successive parts,
//! bounded length and part size. Also the mod-5 splitting of a partition
//! into biword letters.
//!
//! Provides:
//!   Partition            weakly decreasing positive parts
//!   PartitionConstraint  residues / min_gap / min_part / max_length / max_part
//!   generate             all partitions of n under a constraint, largest-part-first
//!   count                same cardinality via a memoized recurrence
//!   conjugate            diagram transpose
//!   mod5_decompose       parts ≡ 1,4 (mod 5) into (record, insert) letters

use std::collections::{BTreeSet, HashMap};
use std::error::Error;
use std::fmt;

use crate::rsk::Biword;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        for w in parts.windows(2) {
            assert!(w[0] >= w[1], "parts must be weakly decreasing");
        }
        assert!(parts.last().is_none_or(|&p| p >= 1), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Constraint family: all fields optional and conjunctive.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PartitionConstraint {
    /// (modulus m, allowed residues ⊂ 0..m−1)
    pub allowed_residues: Option<(usize, BTreeSet<usize>)>,
    /// successive parts differ by at least g: parts[i] − parts[i+1] ≥ g
    pub min_gap: Option<usize>,
    pub min_part: Option<usize>,
    pub max_length: Option<usize>,
    pub max_part: Option<usize>,
}

impl PartitionConstraint {
    pub fn none() -> Self {
        PartitionConstraint::default()
    }

    pub fn residues(m: usize, rs: &[usize]) -> Self {
        assert!(m >= 1);
        let set: BTreeSet<usize> = rs.iter().copied().collect();
        assert!(set.iter().all(|&r| r < m), "residues must lie in 0..m-1");
        PartitionConstraint {
            allowed_residues: Some((m, set)),
            ..Default::default()
        }
    }

    pub fn with_min_gap(mut self, g: usize) -> Self {
        self.min_gap = Some(g);
        self
    }

    pub fn with_min_part(mut self, p: usize) -> Self {
        self.min_part = Some(p);
        self
    }

    pub fn with_max_length(mut self, l: usize) -> Self {
        self.max_length = Some(l);
        self
    }

    pub fn with_max_part(mut self, p: usize) -> Self {
        self.max_part = Some(p);
        self
    }

    fn part_allowed(&self, p: usize) -> bool {
        if let Some((m, ref rs)) = self.allowed_residues {
            if !rs.contains(&(p % m)) {
                return false;
            }
        }
        if let Some(mp) = self.min_part {
            if p < mp {
                return false;
            }
        }
        if let Some(mp) = self.max_part {
            if p > mp {
                return false;
            }
        }
        true
    }

    /// Predicate form, used by tests to validate generated output.
    pub fn satisfied_by(&self, p: &Partition) -> bool {
        if let Some(l) = self.max_length {
            if p.len() > l {
                return false;
            }
        }
        if let Some(g) = self.min_gap {
            for w in p.parts().windows(2) {
                if w[0] - w[1] < g {
                    return false;
                }
            }
        }
        p.parts().iter().all(|&part| self.part_allowed(part))
    }
}

/// All partitions of n satisfying the constraint, each exactly once, in
/// lexicographic largest-part-first order.
pub fn generate(n: usize, c: &PartitionConstraint) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let cap = c.max_part.unwrap_or(n).min(n);
    descend(n, cap, c, &mut stack, &mut out);
    out
}

fn descend(
    remaining: usize,
    cap: usize,
    c: &PartitionConstraint,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    if let Some(l) = c.max_length {
        if stack.len() >= l {
            return;
        }
    }
    let mut p = cap.min(remaining);
    while p >= 1 {
        if c.part_allowed(p) {
            stack.push(p);
            let next_cap = match c.min_gap {
                Some(g) => p.saturating_sub(g),
                None => p,
            };
            descend(remaining - p, next_cap, c, stack, out);
            stack.pop();
        }
        p -= 1;
    }
}

/// |generate(n, c)| via a memoized recurrence over
/// (remaining, largest allowed next part, remaining length budget).
pub fn count(n: usize, c: &PartitionConstraint) -> u64 {
    let mut memo = HashMap::new();
    let cap = c.max_part.unwrap_or(n).min(n);
    count_rec(n, cap, c.max_length, c, &mut memo)
}

fn count_rec(
    remaining: usize,
    cap: usize,
    len_budget: Option<usize>,
    c: &PartitionConstraint,
    memo: &mut HashMap<(usize, usize, Option<usize>), u64>,
) -> u64 {
    if remaining == 0 {
        return 1;
    }
    if len_budget == Some(0) {
        return 0;
    }
    let key = (remaining, cap.min(remaining), len_budget);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for p in (1..=cap.min(remaining)).rev() {
        if !c.part_allowed(p) {
            continue;
        }
        let next_cap = match c.min_gap {
            Some(g) => p.saturating_sub(g),
            None => p,
        };
        total += count_rec(
            remaining - p,
            next_cap,
            len_budget.map(|l| l - 1),
            c,
            memo,
        );
    }
    memo.insert(key, total);
    total
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// A part is not ≡ ±1 (mod 5) and cannot be split as 5m + r, r ∈ {1,4}.
    BadResidue { part: usize },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::BadResidue { part } => {
                write!(f, "part {part} is not congruent to 1 or 4 mod 5")
            }
        }
    }
}

impl Error for PartitionError {}

/// Split every part as 5m + r with r ∈ {1,4} into the letter pair
/// (record r, insert 5m); the result is sorted per the biword convention
/// and preserves total weight.
pub fn mod5_decompose(p: &Partition) -> Result<Biword, PartitionError> {
    let mut pairs = Vec::with_capacity(p.len());
    for &part in p.parts() {
        let r = part % 5;
        if r != 1 && r != 4 {
            return Err(PartitionError::BadResidue { part });
        }
        pairs.push((r, part - r));
    }
    Ok(Biword::from_unsorted(pairs))
}
