//! Schur function specializations by three independent strategies:
//! direct tableau sums, Jacobi-Trudi determinants over complete
//! homogeneous series, and closed-form products (hook content for
//! geometric alphabets, the bialternant ratio for finite unsigned
//! alphabets with distinct weights). The strategies share no code path,
//! so agreement between them is a real cross-check.
//!
//! Provides:
//!   schur                    strategy-dispatched evaluation
//!   h_complete / e_complete  complete homogeneous and elementary series
//!   schur_jacobi_trudi       det(h_{λ_i−i+j})
//!   schur_dual_jacobi_trudi  det(e_{λ'_i−i+j}), cheap when parts are small
//!   schur_principal_2row     two-row principal specialization product
//!   schur_y_2row             two-row evaluation at (q, q^4)

use std::error::Error;
use std::fmt;

use crate::partitions::Partition;
use crate::qseries::{FactoredProduct, QSeries};
use crate::tableaux::{weight_genfun, Alphabet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    SsytSum,
    JacobiTrudi,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchurError {
    /// ClosedForm was requested for a (shape, alphabet) pattern without
    /// a supported product formula.
    UnsupportedClosedForm { reason: String },
}

impl fmt::Display for SchurError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchurError::UnsupportedClosedForm { reason } => {
                write!(f, "no closed form available: {reason}")
            }
        }
    }
}

impl Error for SchurError {}

/// Specialized Schur function s_shape(alphabet) truncated at `order`.
pub fn schur(
    shape: &Partition,
    alphabet: &Alphabet,
    order: usize,
    strategy: Strategy,
) -> Result<QSeries, SchurError> {
    match strategy {
        Strategy::SsytSum => Ok(weight_genfun(shape, alphabet, order)),
        Strategy::JacobiTrudi => Ok(schur_jacobi_trudi(shape, alphabet, order)),
        Strategy::ClosedForm => closed_form(shape, alphabet, order),
    }
}

/// Complete homogeneous symmetric function h_m at the alphabet.
pub fn h_complete(m: usize, alphabet: &Alphabet, order: usize) -> QSeries {
    h_table(alphabet, m, order).pop().unwrap()
}

/// h_0..h_max_m at the alphabet, sharing one DP / product chain.
pub fn h_table(alphabet: &Alphabet, max_m: usize, order: usize) -> Vec<QSeries> {
    match alphabet {
        Alphabet::Geometric { base, step } => {
            // h_m(q^b, q^{b+M}, ...) = q^{bm} / (q^M;q^M)_m.
            let mut out = Vec::with_capacity(max_m + 1);
            let mut inv = QSeries::one(order);
            for m in 0..=max_m {
                if m > 0 {
                    let e = step * m;
                    if e <= order {
                        inv.div_one_minus_qe(e);
                    }
                }
                let min = base * m;
                if min > order {
                    out.push(QSeries::zero(order));
                } else if min == 0 {
                    out.push(inv.clone());
                } else {
                    out.push(inv.truncate(order - min).shift_up(min));
                }
            }
            out
        }
        Alphabet::Finite(letters) => {
            // h_t over the first j letters: h_t(j) = h_t(j−1) + x_j h_{t−1}(j).
            let mut table: Vec<QSeries> = Vec::with_capacity(max_m + 1);
            table.push(QSeries::one(order));
            for _ in 1..=max_m {
                table.push(QSeries::zero(order));
            }
            for letter in letters {
                for t in 1..=max_m {
                    let shifted = table[t - 1].shift_trunc(letter.exponent);
                    let term = if letter.sign < 0 { shifted.neg() } else { shifted };
                    table[t] = table[t].add(&term);
                }
            }
            table
        }
    }
}

/// Elementary symmetric function e_0..e_max_m at the alphabet.
pub fn e_table(alphabet: &Alphabet, max_m: usize, order: usize) -> Vec<QSeries> {
    match alphabet {
        Alphabet::Geometric { base, step } => {
            // e_m picks m distinct letters; minimal choice is the first m:
            // e_m = q^{bm + M·m(m−1)/2} / (q^M;q^M)_m.
            let mut out = Vec::with_capacity(max_m + 1);
            let mut inv = QSeries::one(order);
            for m in 0..=max_m {
                if m > 0 {
                    let e = step * m;
                    if e <= order {
                        inv.div_one_minus_qe(e);
                    }
                }
                let min = base * m + step * (m * m.saturating_sub(1)) / 2;
                if min > order {
                    out.push(QSeries::zero(order));
                } else {
                    out.push(inv.truncate(order - min).shift_up(min));
                }
            }
            out
        }
        Alphabet::Finite(letters) => {
            // e_t(j) = e_t(j−1) + x_j e_{t−1}(j−1): sweep t downward so the
            // row still holds the j−1 values.
            let mut table: Vec<QSeries> = Vec::with_capacity(max_m + 1);
            table.push(QSeries::one(order));
            for _ in 1..=max_m {
                table.push(QSeries::zero(order));
            }
            for letter in letters {
                for t in (1..=max_m).rev() {
                    let shifted = table[t - 1].shift_trunc(letter.exponent);
                    let term = if letter.sign < 0 { shifted.neg() } else { shifted };
                    table[t] = table[t].add(&term);
                }
            }
            table
        }
    }
}

pub fn e_complete(m: usize, alphabet: &Alphabet, order: usize) -> QSeries {
    e_table(alphabet, m, order).pop().unwrap()
}

/// det(h_{λ_i − i + j})_{1≤i,j≤r} by Laplace expansion with memoization
/// over column subsets; h with negative subscript is zero.
pub fn schur_jacobi_trudi(shape: &Partition, alphabet: &Alphabet, order: usize) -> QSeries {
    let r = shape.len();
    if r == 0 {
        return QSeries::one(order);
    }
    assert!(r <= 12, "determinant size {r} beyond desk scale");
    let lambda1 = shape.parts()[0];
    let h = h_table(alphabet, lambda1 + r, order);
    let subscript = |i: usize, j: usize| -> Option<usize> {
        // λ_{i+1} − (i+1) + (j+1) with 0-based i, j
        (shape.parts()[i] + j + 1).checked_sub(i + 1)
    };
    det_by_subsets(r, order, &|i, j| subscript(i, j).map(|s| &h[s]))
}

/// det(e_{λ'_i − i + j}): the dual form, an r'×r' determinant where
/// r' = λ_1. Preferable when parts are small but the shape is long.
pub fn schur_dual_jacobi_trudi(shape: &Partition, alphabet: &Alphabet, order: usize) -> QSeries {
    let conj = shape.conjugate();
    let r = conj.len();
    if r == 0 {
        return QSeries::one(order);
    }
    assert!(r <= 12, "determinant size {r} beyond desk scale");
    let e = e_table(alphabet, conj.parts()[0] + r, order);
    let subscript = |i: usize, j: usize| -> Option<usize> {
        (conj.parts()[i] + j + 1).checked_sub(i + 1)
    };
    det_by_subsets(r, order, &|i, j| subscript(i, j).map(|s| &e[s]))
}

/// Determinant of an r×r series matrix: D[S] = det of the first |S| rows
/// on column set S, expanded along the last row of each block.
fn det_by_subsets<'a>(
    r: usize,
    order: usize,
    entry: &dyn Fn(usize, usize) -> Option<&'a QSeries>,
) -> QSeries {
    let mut d: Vec<Option<QSeries>> = vec![None; 1 << r];
    d[0] = Some(QSeries::one(order));
    for mask in 1usize..(1 << r) {
        let row = (mask.count_ones() - 1) as usize;
        let mut acc = QSeries::zero(order);
        let mut pos = 0;
        for j in 0..r {
            if mask & (1 << j) == 0 {
                continue;
            }
            if let Some(h) = entry(row, j) {
                if !h.is_zero() {
                    let sub = d[mask ^ (1 << j)]
                        .as_ref()
                        .expect("subset DP fills in popcount order");
                    let term = h.mul(sub);
                    // cofactor sign (−1)^{row + pos}
                    if (row + pos) % 2 == 0 {
                        acc = acc.add(&term);
                    } else {
                        acc = acc.sub(&term);
                    }
                }
            }
            pos += 1;
        }
        d[mask] = Some(acc);
    }
    d[(1 << r) - 1].take().unwrap()
}

/// Two-row principal specialization, shape (a+b, a) over 1, q^5, q^10, ...:
/// q^{5a} / ((q^5;q^5)_a (q^5;q^5)_b (q^{5(b+2)};q^5)_a).
pub fn schur_principal_2row(a: usize, b: usize, order: usize) -> QSeries {
    let mut p = FactoredProduct::monomial(1, 5 * a as i64);
    p = p.mul(&FactoredProduct::poch_finite(5, 5, a).inv());
    p = p.mul(&FactoredProduct::poch_finite(5, 5, b).inv());
    if a > 0 {
        p = p.mul(&FactoredProduct::poch_finite(5 * (b + 2), 5, a).inv());
    }
    p.expand(order).expect("nonnegative shift")
}

/// Two-row evaluation at the pair (q, q^4), shape (a+b, a):
/// q^{5a+b} Σ_{k=0}^{b} q^{3k}, an exact polynomial.
pub fn schur_y_2row(a: usize, b: usize) -> QSeries {
    let top = 5 * a + b + 3 * b;
    let mut s = QSeries::zero(top);
    for k in 0..=b {
        s = s.add(&QSeries::monomial(
            num::BigRational::from_integer(1.into()),
            5 * a + b + 3 * k,
            top,
        ));
    }
    s
}

fn closed_form(shape: &Partition, alphabet: &Alphabet, order: usize) -> Result<QSeries, SchurError> {
    match alphabet {
        Alphabet::Geometric { base, step } => Ok(hook_content(shape, *base, *step, order)),
        Alphabet::Finite(letters) => {
            if letters.iter().any(|l| l.sign < 0) {
                return Err(SchurError::UnsupportedClosedForm {
                    reason: "signed finite alphabet".to_string(),
                });
            }
            let exps: Vec<usize> = letters.iter().map(|l| l.exponent).collect();
            let mut sorted = exps.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(SchurError::UnsupportedClosedForm {
                    reason: "duplicate letter weights".to_string(),
                });
            }
            Ok(bialternant(shape, &sorted, order))
        }
    }
}

/// Hook content product for a geometric alphabet:
/// s_λ(q^b, q^{b+M}, ...) = q^{b|λ| + M n(λ)} Π_{cells} 1/(1 − q^{M·hook}).
fn hook_content(shape: &Partition, base: usize, step: usize, order: usize) -> QSeries {
    let n_lambda: usize = shape.parts().iter().enumerate().map(|(i, &p)| i * p).sum();
    let min = base * shape.weight() + step * n_lambda;
    if min > order {
        return QSeries::zero(order);
    }
    let reduced = order - min;
    let conj = shape.conjugate();
    let mut f = QSeries::one(reduced);
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in 0..len {
            let hook = len - j + conj.parts()[j] - i - 1;
            let e = step * hook;
            if e <= reduced {
                f.div_one_minus_qe(e);
            }
        }
    }
    f.shift_up(min)
}

/// Bialternant ratio for distinct unsigned exponents c_0 < ... < c_{R−1}:
/// s_λ = det(q^{c_i μ_j}) / det(q^{c_i δ_j}) with μ = λ + δ. The numerator
/// is a signed sum over permutations; the denominator is a q-power times
/// Π_{i<j}(1 − q^{c_j − c_i}).
fn bialternant(shape: &Partition, c: &[usize], order: usize) -> QSeries {
    let r = c.len();
    if shape.len() > r {
        return QSeries::zero(order);
    }
    assert!(r <= 9, "bialternant over {r} letters is beyond desk scale");
    let mut lambda = shape.parts().to_vec();
    lambda.resize(r, 0);
    let mu: Vec<usize> = lambda.iter().enumerate().map(|(j, &l)| l + r - 1 - j).collect();
    // Denominator q-power and the windowing minimum.
    let e_den: usize = c.iter().enumerate().map(|(i, &ci)| ci * (r - 1 - i)).sum();
    let minw: usize = c.iter().zip(&lambda).map(|(&ci, &li)| ci * li).sum();
    if minw > order {
        return QSeries::zero(order);
    }
    let reduced = order - minw;
    // Signed permutation counts per exponent; |sum| ≤ r! fits i64 easily.
    let mut tally = vec![0i64; reduced + 1];
    // Heap's algorithm over σ, tracking sign; exponent Σ_j c[σ(j)]·μ[j].
    let mut perm: Vec<usize> = (0..r).collect();
    let mut stack = vec![0usize; r];
    let mut sign = 1i8;
    let emit = |perm: &[usize], sign: i8, tally: &mut [i64]| {
        let e: usize = perm.iter().zip(&mu).map(|(&p, &m)| c[p] * m).sum();
        let rel = e - e_den - minw; // ≥ 0 by the rearrangement bound
        if rel <= reduced {
            tally[rel] += sign as i64;
        }
    };
    emit(&perm, sign, &mut tally);
    let mut i = 1;
    while i < r {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            sign = -sign;
            emit(&perm, sign, &mut tally);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    let mut f = QSeries::new(
        tally
            .into_iter()
            .map(|v| num::BigRational::from_integer(v.into()))
            .collect(),
        reduced,
    );
    for i in 0..r {
        for j in (i + 1)..r {
            let e = c[j] - c[i];
            if e <= reduced {
                f.div_one_minus_qe(e);
            }
        }
    }
    f.shift_up(minw)
}
