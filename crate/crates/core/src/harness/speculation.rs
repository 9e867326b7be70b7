//! Prober for the open row-restricted decomposition question: when the
//! Cauchy sum over shapes with at most R rows replaces the full sum, is
//! the result a combination Σ_T c_T(q) Π_{j∈T} 1/(q^j;q^{2k+3})_∞ over
//! the R-element subsets T of the residue set J, with rational-function
//! coefficients c_T?
//!
//! The ansatz fixes a trial denominator D = (q;q)_d and fits one numerator
//! polynomial per subset by linear algebra on series coefficients, leaving
//! a withheld band of top coefficients out of the fit. Elimination runs
//! modulo large primes for speed; any candidate is then re-verified with
//! exact rational arithmetic through the full order, withheld band
//! included, so a reported solution never rests on modular arithmetic.
//! When no candidate survives, the report says Inconclusive: failure to
//! fit this ansatz refutes nothing.

use std::time::Instant;

use num::{BigInt, BigRational};

use crate::qseries::{poch_finite_poly, QPoly, QSeries, RationalFunction};
use crate::tableaux::Alphabet;

use super::cauchy::restricted_cauchy_sum;
use super::genthm::genthm_j_set;
use super::linsolve::{
    bigint_mod_p, crt_combine, primes_from, rational_reconstruct, solve_mod_p, SolveOutcome,
};
use super::report::{
    params_map, report_from_series, IdentityReport, ProbeReport, SpeculationSolution,
    SpeculationTerm, Status,
};
use super::rr::inverse_pochhammer_product;
use super::HarnessError;

/// Beyond this many primes (about 500 bits of modulus) the coefficients
/// are not going to reconstruct; give up and report Inconclusive.
const MAX_PRIMES: usize = 8;

/// Size-`r` subsets of `set` in lexicographic order; with `repeats`,
/// weakly increasing multisets instead.
fn subsets_of_size(set: &[usize], r: usize, repeats: bool) -> Vec<Vec<usize>> {
    fn rec(
        set: &[usize],
        r: usize,
        start: usize,
        repeats: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for idx in start..set.len() {
            cur.push(set[idx]);
            rec(set, r, if repeats { idx } else { idx + 1 }, repeats, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(set, r, 0, repeats, &mut Vec::new(), &mut out);
    out
}

fn integer_coeffs(s: &QSeries) -> Vec<BigInt> {
    s.coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "series coefficient is not an integer");
            c.numer().clone()
        })
        .collect()
}

struct Ansatz {
    denom: QPoly,
    denom_degree: usize,
    num_deg: usize,
    subsets: Vec<Vec<usize>>,
    /// Series of Π_{j∈T} 1/(q^j;q^M)_∞ per subset, at full order.
    products: Vec<QSeries>,
    /// Target G = S_R · D at full order.
    target: QSeries,
}

impl Ansatz {
    fn build(
        k: usize,
        i: usize,
        rows: usize,
        order: usize,
        denominator_degree: Option<usize>,
        allow_repeats: bool,
    ) -> Result<Ansatz, HarnessError> {
        let j_set = genthm_j_set(k, i)?;
        if rows < 1 || rows > 2 * k {
            return Err(HarnessError::InvalidParams(format!(
                "rows must satisfy 1 <= rows <= {}, got {rows}",
                2 * k
            )));
        }
        let modulus = 2 * k + 3;
        let d_deg = denominator_degree.unwrap_or(2 * k + 1);
        let denom = poch_finite_poly(1, 1, d_deg);
        let num_deg = denom.degree().unwrap_or(0);
        let subsets = subsets_of_size(&j_set, rows, allow_repeats);
        let x = Alphabet::geometric(0, modulus);
        let y = Alphabet::finite_exponents(&j_set);
        let s_r = restricted_cauchy_sum(&x, &y, order, rows);
        let target = s_r.mul(&denom.to_series(order));
        let products = subsets
            .iter()
            .map(|t| {
                let pairs: Vec<(usize, usize)> = t.iter().map(|&j| (j, modulus)).collect();
                inverse_pochhammer_product(&pairs, order)
            })
            .collect();
        Ok(Ansatz {
            denom,
            denom_degree: d_deg,
            num_deg,
            subsets,
            products,
            target,
        })
    }

    fn n_cols(&self) -> usize {
        self.subsets.len() * (self.num_deg + 1)
    }

    /// Candidate numerators satisfy Σ_T n_T·P_T = S_R·D through the full
    /// order, checked in exact rational arithmetic.
    fn validates(&self, numerators: &[QPoly]) -> bool {
        let order = self.target.order();
        let mut sum = QSeries::zero(order);
        for (n_t, p_t) in numerators.iter().zip(&self.products) {
            if !n_t.is_zero() {
                sum = sum.add(&n_t.to_series(order).mul(p_t));
            }
        }
        self.target.first_mismatch(&sum).is_none()
    }
}

fn reconstruct_numerators(
    residues: &[BigInt],
    modulus: &BigInt,
    n_subsets: usize,
    num_deg: usize,
) -> Option<Vec<QPoly>> {
    let per = num_deg + 1;
    let mut polys = Vec::with_capacity(n_subsets);
    for t in 0..n_subsets {
        let mut coeffs: Vec<BigRational> = Vec::with_capacity(per);
        for d in 0..per {
            coeffs.push(rational_reconstruct(&residues[t * per + d], modulus)?);
        }
        polys.push(QPoly::new(coeffs));
    }
    Some(polys)
}

/// Fit the ansatz at the given order. Exponents 0..=order−margin feed the
/// linear system (margin is a fifth of the order, at least one); the rest
/// stay withheld and only enter the exact re-verification. Returns a
/// report whose status is Pass with a solution, or Inconclusive with none.
pub fn probe_speculation(
    k: usize,
    i: usize,
    rows: usize,
    order: usize,
    denominator_degree: Option<usize>,
    allow_repeats: bool,
) -> Result<ProbeReport, HarnessError> {
    let started = Instant::now();
    let ansatz = Ansatz::build(k, i, rows, order, denominator_degree, allow_repeats)?;
    let n_cols = ansatz.n_cols();
    let margin = (order / 5).max(1);
    let fit_order = order.saturating_sub(margin);
    if fit_order + 1 < n_cols {
        return Err(HarnessError::InvalidParams(format!(
            "order {order} is too small: fitting {n_cols} unknowns needs order at least {}",
            n_cols.div_ceil(4) * 5
        )));
    }

    let target_ints = integer_coeffs(&ansatz.target);
    let product_ints: Vec<Vec<BigInt>> = ansatz.products.iter().map(integer_coeffs).collect();
    let per = ansatz.num_deg + 1;

    let mut accumulated: Option<(Vec<BigInt>, BigInt, Vec<usize>)> = None;
    let mut numerators: Option<Vec<QPoly>> = None;
    for &p in &primes_from(1 << 62, MAX_PRIMES) {
        let mut mat = Vec::with_capacity(fit_order + 1);
        for e in 0..=fit_order {
            let mut row = vec![0u64; n_cols + 1];
            for (t, p_t) in product_ints.iter().enumerate() {
                for d in 0..per.min(e + 1) {
                    row[t * per + d] = bigint_mod_p(&p_t[e - d], p);
                }
            }
            row[n_cols] = bigint_mod_p(&target_ints[e], p);
            mat.push(row);
        }
        let SolveOutcome::Solution { values, pivot_cols } = solve_mod_p(mat, n_cols, p) else {
            continue;
        };
        match &mut accumulated {
            None => {
                accumulated = Some((
                    values.into_iter().map(BigInt::from).collect(),
                    BigInt::from(p),
                    pivot_cols,
                ));
            }
            Some((acc, modulus, pivots)) => {
                if *pivots != pivot_cols {
                    // A pivot-structure disagreement means one prime saw a
                    // degenerate image; keep whichever has higher rank.
                    if pivot_cols.len() > pivots.len() {
                        accumulated = Some((
                            values.into_iter().map(BigInt::from).collect(),
                            BigInt::from(p),
                            pivot_cols,
                        ));
                    }
                } else {
                    for (a, v) in acc.iter_mut().zip(&values) {
                        *a = crt_combine(a, modulus, *v, p);
                    }
                    *modulus *= p;
                }
            }
        }
        if let Some((acc, modulus, _)) = &accumulated {
            if let Some(cand) = reconstruct_numerators(acc, modulus, ansatz.subsets.len(), ansatz.num_deg)
            {
                if ansatz.validates(&cand) {
                    numerators = Some(cand);
                    break;
                }
            }
        }
    }

    let solution = numerators.map(|polys| {
        let subsets = polys
            .into_iter()
            .zip(&ansatz.subsets)
            .filter(|(n_t, _)| !n_t.is_zero())
            .map(|(n_t, t)| SpeculationTerm {
                residues: t.clone(),
                coefficient: RationalFunction::new(n_t, ansatz.denom.clone()),
            })
            .collect();
        SpeculationSolution {
            k,
            i,
            rows,
            subsets,
            residual_order: order,
        }
    });
    let status = if solution.is_some() {
        Status::Pass
    } else {
        Status::Inconclusive
    };
    let base = IdentityReport {
        identity_name: "speculation".to_string(),
        params: params_map(&[
            ("k", k as i64),
            ("i", i as i64),
            ("rows", rows as i64),
            ("denominator_degree", ansatz.denom_degree as i64),
            ("allow_repeats", allow_repeats as i64),
        ]),
        order,
        status,
        first_mismatch: None,
        elapsed_ms: started.elapsed().as_millis(),
    };
    Ok(ProbeReport { base, solution })
}

/// Re-verify a proposed decomposition directly: the restricted Cauchy sum
/// against Σ_T c_T·Π_{j∈T} 1/(q^j;q^M)_∞ at the given order.
pub fn check_solution(
    k: usize,
    i: usize,
    rows: usize,
    terms: &[SpeculationTerm],
    order: usize,
) -> Result<IdentityReport, HarnessError> {
    let started = Instant::now();
    let j_set = genthm_j_set(k, i)?;
    if rows < 1 || rows > 2 * k {
        return Err(HarnessError::InvalidParams(format!(
            "rows must satisfy 1 <= rows <= {}, got {rows}",
            2 * k
        )));
    }
    for t in terms {
        for &j in &t.residues {
            if !j_set.contains(&j) {
                return Err(HarnessError::InvalidParams(format!(
                    "residue {j} is outside the admissible set {j_set:?}"
                )));
            }
        }
    }
    let m = 2 * k + 3;
    let x = Alphabet::geometric(0, m);
    let y = Alphabet::finite_exponents(&j_set);
    let lhs = restricted_cauchy_sum(&x, &y, order, rows);
    let mut rhs = QSeries::zero(order);
    for t in terms {
        let pairs: Vec<(usize, usize)> = t.residues.iter().map(|&j| (j, m)).collect();
        let prod = inverse_pochhammer_product(&pairs, order);
        rhs = rhs.add(&t.coefficient.to_series(order).mul(&prod));
    }
    let params = [("k", k as i64), ("i", i as i64), ("rows", rows as i64)];
    Ok(report_from_series(
        "speculation-check",
        &params,
        &lhs,
        &rhs,
        started,
    ))
}
