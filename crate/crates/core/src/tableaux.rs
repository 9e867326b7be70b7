//! Weighted alphabets and column-strict (semistandard) tableaux, with
//! weight-bounded enumeration that stays finite even over the infinite
//! geometric alphabets used by principal specializations.
//!
//! Provides:
//!   Alphabet        Finite (ordered, signed, weighted letters) or Geometric(base, step)
//!   Tableau         rows of letters, column-strict
//!   enumerate_ssyt  all fillings of a shape with weight ≤ bound
//!   weight_genfun   signed weight generating function of a shape
//!   validate        column-strictness predicate

use crate::partitions::Partition;
use crate::qseries::QSeries;

/// A letter of a finite alphabet: q-weight exponent and sign. The
/// letter's position in the alphabet sequence is its tableau order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub exponent: usize,
    pub sign: i8,
}

/// Tableau entry alphabet. Finite alphabets order letters by sequence
/// position (tableau entries are positions); geometric alphabets are the
/// infinite chain base, base+step, ... with weight q^value (entries are
/// the values themselves, all signs +1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alphabet {
    Finite(Vec<Letter>),
    Geometric { base: usize, step: usize },
}

impl Alphabet {
    pub fn finite(letters: Vec<Letter>) -> Self {
        assert!(letters.iter().all(|l| l.sign == 1 || l.sign == -1));
        Alphabet::Finite(letters)
    }

    /// Unsigned finite alphabet with the given weight exponents.
    pub fn finite_exponents(exps: &[usize]) -> Self {
        Alphabet::Finite(
            exps.iter()
                .map(|&exponent| Letter { exponent, sign: 1 })
                .collect(),
        )
    }

    pub fn geometric(base: usize, step: usize) -> Self {
        assert!(step >= 1, "geometric step must be >= 1");
        Alphabet::Geometric { base, step }
    }

    /// Number of letters; None for the infinite geometric chain.
    pub fn letter_count(&self) -> Option<usize> {
        match self {
            Alphabet::Finite(ls) => Some(ls.len()),
            Alphabet::Geometric { .. } => None,
        }
    }

    pub fn weight_of(&self, entry: usize) -> usize {
        match self {
            Alphabet::Finite(ls) => ls[entry].exponent,
            Alphabet::Geometric { .. } => entry,
        }
    }

    pub fn sign_of(&self, entry: usize) -> i8 {
        match self {
            Alphabet::Finite(ls) => ls[entry].sign,
            Alphabet::Geometric { .. } => 1,
        }
    }

    /// Least possible weight of an entry in row r (0-based): the first
    /// column forces entries of row r to be at least the r-th letter.
    /// None when the alphabet has no such letter.
    fn min_weight_for_row(&self, r: usize) -> Option<usize> {
        match self {
            Alphabet::Finite(ls) => {
                if r >= ls.len() {
                    None
                } else {
                    ls[r..].iter().map(|l| l.exponent).min()
                }
            }
            Alphabet::Geometric { base, step } => Some(base + r * step),
        }
    }
}

/// Filling of a Young diagram; entries are alphabet-dependent
/// (letter positions for finite alphabets, letter values for geometric).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Sum of all entries (used by the RSK weight bookkeeping, where
    /// entries are raw letter values).
    pub fn entry_sum(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    pub fn weight_exponent(&self, alphabet: &Alphabet) -> usize {
        self.rows
            .iter()
            .flatten()
            .map(|&e| alphabet.weight_of(e))
            .sum()
    }

    pub fn sign(&self, alphabet: &Alphabet) -> i8 {
        let negatives = self
            .rows
            .iter()
            .flatten()
            .filter(|&&e| alphabet.sign_of(e) < 0)
            .count();
        if negatives % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// True iff row lengths weakly decrease, rows weakly increase left to
/// right and columns strictly increase top to bottom.
pub fn validate(t: &Tableau) -> bool {
    let rows = t.rows();
    for w in rows.windows(2) {
        if w[0].len() < w[1].len() {
            return false;
        }
    }
    for row in rows {
        for w in row.windows(2) {
            if w[0] > w[1] {
                return false;
            }
        }
    }
    for r in 1..rows.len() {
        for c in 0..rows[r].len() {
            if rows[r - 1][c] >= rows[r][c] {
                return false;
            }
        }
    }
    true
}

/// Every column-strict filling of `shape` with total weight exponent
/// ≤ max_weight, exactly once, in a deterministic order.
pub fn enumerate_ssyt(shape: &Partition, alphabet: &Alphabet, max_weight: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    visit_ssyt(shape, alphabet, max_weight, &mut |t| out.push(t.clone()));
    out
}

/// Streaming form of `enumerate_ssyt`: calls `f` once per tableau.
pub fn visit_ssyt<F: FnMut(&Tableau)>(
    shape: &Partition,
    alphabet: &Alphabet,
    max_weight: usize,
    f: &mut F,
) {
    let nrows = shape.len();
    if nrows == 0 {
        f(&Tableau::empty());
        return;
    }
    if let Some(count) = alphabet.letter_count() {
        if nrows > count {
            return; // a first column of length nrows cannot be strict
        }
    }
    // Cells in row-reading order with each cell's row index.
    let mut cells = Vec::new();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            cells.push((r, c));
        }
    }
    // min_tail[i] = least possible total weight of cells i.. (by row bound).
    let mut min_tail = vec![0usize; cells.len() + 1];
    for i in (0..cells.len()).rev() {
        let (r, _) = cells[i];
        let cell_min = match alphabet.min_weight_for_row(r) {
            Some(w) => w,
            None => return, // unfillable row
        };
        min_tail[i] = min_tail[i + 1] + cell_min;
    }
    if min_tail[0] > max_weight {
        return;
    }
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    fill(
        &cells, 0, 0, &mut rows, shape, alphabet, max_weight, &min_tail, f,
    );
}

#[allow(clippy::too_many_arguments)]
fn fill<F: FnMut(&Tableau)>(
    cells: &[(usize, usize)],
    idx: usize,
    weight_so_far: usize,
    rows: &mut Vec<Vec<usize>>,
    shape: &Partition,
    alphabet: &Alphabet,
    max_weight: usize,
    min_tail: &[usize],
    f: &mut F,
) {
    if idx == cells.len() {
        let t = Tableau::new(rows.clone());
        debug_assert!(validate(&t));
        f(&t);
        return;
    }
    let (r, c) = cells[idx];
    let budget_after = max_weight - weight_so_far - min_tail[idx + 1];
    match alphabet {
        Alphabet::Finite(letters) => {
            let mut lo = if r > 0 { rows[r - 1][c] + 1 } else { 0 };
            if c > 0 {
                lo = lo.max(rows[r][c - 1]);
            }
            for entry in lo..letters.len() {
                let w = letters[entry].exponent;
                if w > budget_after {
                    continue; // weights are not monotone in letter order
                }
                rows[r][c] = entry;
                fill(
                    cells,
                    idx + 1,
                    weight_so_far + w,
                    rows,
                    shape,
                    alphabet,
                    max_weight,
                    min_tail,
                    f,
                );
            }
        }
        Alphabet::Geometric { base, step } => {
            // Entries are values base + k·step; strictness above means
            // at least one step more.
            let mut lo = base + r * step;
            if r > 0 {
                lo = lo.max(rows[r - 1][c] + step);
            }
            if c > 0 {
                lo = lo.max(rows[r][c - 1]);
            }
            let mut entry = lo;
            while entry <= budget_after {
                rows[r][c] = entry;
                fill(
                    cells,
                    idx + 1,
                    weight_so_far + entry,
                    rows,
                    shape,
                    alphabet,
                    max_weight,
                    min_tail,
                    f,
                );
                entry += step;
            }
        }
    }
}

/// Σ over all fillings of sign(t)·q^{weight(t)}, truncated at `order`.
pub fn weight_genfun(shape: &Partition, alphabet: &Alphabet, order: usize) -> QSeries {
    use num::BigRational;
    let mut coeffs = vec![BigRational::from_integer(0.into()); order + 1];
    visit_ssyt(shape, alphabet, order, &mut |t| {
        let w = t.weight_exponent(alphabet);
        let one = BigRational::from_integer(1.into());
        if t.sign(alphabet) > 0 {
            coeffs[w] += one;
        } else {
            coeffs[w] -= one;
        }
    });
    QSeries::new(coeffs, order)
}
