use std::error::Error;
use std::fmt;

use num::{BigRational, Signed, Zero};

use super::{rat_int, rat_zero};

/// Truncated power series in q with exact rational coefficients.
///
/// A value of order N tracks the coefficients of q^0..q^N inclusive;
/// `coeffs.len() == order + 1` always. Arithmetic results carry
/// order = min of the operand orders.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion requires a nonzero coefficient of q^0.
    ZeroConstantTerm,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroConstantTerm => {
                write!(f, "series has zero constant term and cannot be inverted")
            }
        }
    }
}

impl Error for SeriesError {}

impl QSeries {
    /// Series with the given coefficients for q^0..q^order. Pads with
    /// zeros or truncates so the length matches order+1.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, rat_zero());
        QSeries { order, coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        QSeries::new(coeffs.iter().map(|&c| rat_int(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        QSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        QSeries::monomial(rat_int(1), 0, order)
    }

    /// c·q^e truncated at `order` (zero series if e > order).
    pub fn monomial(c: BigRational, e: usize, order: usize) -> Self {
        let mut f = QSeries::zero(order);
        if e <= order {
            f.coeffs[e] = c;
        }
        f
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of q^e. Panics if e exceeds the order: asking past
    /// the truncation point is a logic error, not a zero.
    pub fn coeff(&self, e: usize) -> &BigRational {
        assert!(e <= self.order, "coefficient q^{e} beyond order {}", self.order);
        &self.coeffs[e]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for e in 0..=order {
            coeffs.push(&self.coeffs[e] + &other.coeffs[e]);
        }
        QSeries { order, coeffs }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let mut coeffs = Vec::with_capacity(order + 1);
        for e in 0..=order {
            coeffs.push(&self.coeffs[e] - &other.coeffs[e]);
        }
        QSeries { order, coeffs }
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at min(orders). Skips zero coefficients,
    /// which matters for the sparse series the harness multiplies.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let mut coeffs = vec![rat_zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        QSeries { order, coeffs }
    }

    /// Multiplicative inverse up to the same order; errors when the
    /// constant term vanishes.
    pub fn invert(&self) -> Result<QSeries, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let c0inv = self.coeffs[0].recip();
        let mut inv = vec![rat_zero(); self.order + 1];
        inv[0] = c0inv.clone();
        for n in 1..=self.order {
            let mut acc = rat_zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !inv[n - k].is_zero() {
                    acc += &self.coeffs[k] * &inv[n - k];
                }
            }
            inv[n] = -(acc * &c0inv);
        }
        Ok(QSeries {
            order: self.order,
            coeffs: inv,
        })
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        QSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// In-place multiplication by (1 − q^e). O(order).
    pub fn mul_one_minus_qe(&mut self, e: usize) {
        assert!(e >= 1, "factor exponent must be >= 1");
        if e > self.order {
            return;
        }
        for n in (e..=self.order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] -= &lo[n - e];
        }
    }

    /// In-place division by (1 − q^e), i.e. multiplication by the
    /// geometric series 1 + q^e + q^{2e} + ... . O(order).
    pub fn div_one_minus_qe(&mut self, e: usize) {
        assert!(e >= 1, "factor exponent must be >= 1");
        if e > self.order {
            return;
        }
        for n in e..=self.order {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] += &lo[n - e];
        }
    }

    /// Multiply by q^s, extending the order by s: if f is exact mod
    /// q^{N+1} then q^s·f is exact mod q^{N+s+1}. This is the windowing
    /// primitive: compute a tail factor at reduced order, then shift up.
    pub fn shift_up(&self, s: usize) -> QSeries {
        let mut coeffs = vec![rat_zero(); self.order + s + 1];
        coeffs[s..].clone_from_slice(&self.coeffs);
        QSeries {
            order: self.order + s,
            coeffs,
        }
    }

    /// Multiply by q^s at fixed order (top s coefficients fall off;
    /// s beyond the order gives the zero series).
    pub fn shift_trunc(&self, s: usize) -> QSeries {
        let mut f = QSeries::zero(self.order);
        if s > self.order {
            return f;
        }
        for e in 0..=self.order - s {
            f.coeffs[e + s] = self.coeffs[e].clone();
        }
        f
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        assert!(order <= self.order, "cannot extend order {} to {order}", self.order);
        QSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// First exponent e ≤ min(orders) where the coefficients differ,
    /// with both coefficients. None means agreement up to that order.
    pub fn first_mismatch(&self, other: &QSeries) -> Option<(usize, BigRational, BigRational)> {
        let order = self.order.min(other.order);
        (0..=order)
            .find(|&e| self.coeffs[e] != other.coeffs[e])
            .map(|e| (e, self.coeffs[e].clone(), other.coeffs[e].clone()))
    }

    /// Order up to which a comparison against `other` is meaningful.
    pub fn compared_order(&self, other: &QSeries) -> usize {
        self.order.min(other.order)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{}]({self})", self.order)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
            } else {
                if a != super::rat_one() {
                    write!(f, "{a}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{poch_finite, poch_infinite};

    /// Brute-force oracle: number of partitions of n into parts drawn
    /// from `parts` (repetition allowed). Independent of all series code.
    fn count_partitions_into(n: usize, parts: &[usize]) -> i64 {
        fn rec(n: usize, parts: &[usize], max_idx: usize) -> i64 {
            if n == 0 {
                return 1;
            }
            let mut total = 0;
            for (i, &p) in parts.iter().enumerate().take(max_idx + 1) {
                if p <= n {
                    total += rec(n - p, parts, i);
                }
            }
            total
        }
        rec(n, parts, parts.len().saturating_sub(1))
    }

    #[test]
    fn add_cancellation_and_identity() {
        let one_plus_q = QSeries::from_i64(&[1, 1], 5);
        let one_minus_q = QSeries::from_i64(&[1, -1], 5);
        assert_eq!(one_plus_q.add(&one_minus_q), QSeries::from_i64(&[2], 5));
        let zero = QSeries::zero(5);
        assert_eq!(one_plus_q.add(&zero), one_plus_q);
    }

    #[test]
    fn add_table1_numerators() {
        let a = QSeries::from_i64(&[0, 1, 0, 0, 1], 6);
        let b = QSeries::from_i64(&[0, 0, 1, 0, 0, 1], 6);
        let sum = QSeries::from_i64(&[0, 1, 1, 0, 1, 1], 6);
        assert_eq!(a.add(&b), sum);
    }

    #[test]
    fn mul_identity_and_geometric() {
        let f = QSeries::from_i64(&[3, 0, -2, 7], 3);
        assert_eq!(f.mul(&QSeries::one(3)), f);
        let geo = QSeries::from_i64(&[1, 1, 1, 1, 1, 1], 5);
        let one_minus_q = QSeries::from_i64(&[1, -1], 5);
        assert_eq!(one_minus_q.mul(&geo), QSeries::one(5));
    }

    #[test]
    fn mul_table1_lambda1_numerator() {
        let f = QSeries::from_i64(&[1, 0, 0, 1], 4);
        let q = QSeries::from_i64(&[0, 1], 4);
        assert_eq!(f.mul(&q), QSeries::from_i64(&[0, 1, 0, 0, 1], 4));
    }

    #[test]
    fn order_propagates_as_min() {
        let f = QSeries::one(10);
        let g = QSeries::one(4);
        assert_eq!(f.add(&g).order(), 4);
        assert_eq!(f.mul(&g).order(), 4);
        assert_eq!(f.sub(&g).order(), 4);
    }

    #[test]
    fn invert_geometric() {
        let f = QSeries::from_i64(&[1, -1], 8);
        let inv = f.invert().unwrap();
        assert_eq!(inv, QSeries::from_i64(&[1; 9], 8));
    }

    #[test]
    fn invert_zero_constant_term_errors() {
        let f = QSeries::from_i64(&[0, 1], 3);
        assert_eq!(f.invert().unwrap_err(), SeriesError::ZeroConstantTerm);
    }

    #[test]
    fn invert_counts_partitions_into_parts_at_most_two() {
        // 1/((1-q)(1-q^2)) counts partitions into parts <= 2.
        let order = 12;
        let f = poch_finite(1, 1, 2, order);
        let inv = f.invert().unwrap();
        for n in 0..=order {
            let expected = count_partitions_into(n, &[1, 2]);
            assert_eq!(*inv.coeff(n), rat_int(expected), "n = {n}");
        }
    }

    #[test]
    fn invert_counts_partitions_into_residues_one_four_mod_five() {
        // 1/((q;q^5)_inf (q^4;q^5)_inf) at order 6: parts from {1,4,6,...}.
        let order = 6;
        let f = poch_infinite(1, 5, order).mul(&poch_infinite(4, 5, order));
        let inv = f.invert().unwrap();
        let expected = [1, 1, 1, 1, 2, 2, 3];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(*inv.coeff(n), rat_int(c), "n = {n}");
            assert_eq!(rat_int(count_partitions_into(n, &[1, 4, 6])), rat_int(c));
        }
    }

    #[test]
    fn mul_then_invert_roundtrip() {
        let f = QSeries::from_i64(&[2, 3, 0, -1, 5], 9);
        let inv = f.invert().unwrap();
        assert_eq!(f.mul(&inv), QSeries::one(9));
    }

    #[test]
    fn poch_finite_small_cases() {
        assert_eq!(poch_finite(1, 1, 0, 5), QSeries::one(5));
        assert_eq!(poch_finite(1, 1, 2, 3), QSeries::from_i64(&[1, -1, -1, 1], 3));
        assert_eq!(poch_finite(5, 5, 1, 6), QSeries::from_i64(&[1, 0, 0, 0, 0, -1], 6));
    }

    #[test]
    fn poch_infinite_matches_stabilized_finite() {
        // (q^a;q^m)_inf = (q^a;q^m)_n at order N once a+nm > N.
        for (a, m, order) in [(1usize, 5usize, 23usize), (2, 3, 17), (4, 5, 9), (1, 1, 12)] {
            let inf = poch_infinite(a, m, order);
            let mut n = 0;
            while a + n * m <= order {
                n += 1;
            }
            assert_eq!(inf, poch_finite(a, m, n, order));
            assert_eq!(inf, poch_finite(a, m, n + 3, order));
        }
    }

    #[test]
    fn poch_infinite_below_base_is_one() {
        assert_eq!(poch_infinite(7, 5, 6), QSeries::one(6));
    }

    #[test]
    fn binomial_helpers_match_mul() {
        let mut f = QSeries::from_i64(&[1, 2, 3, 4, 5, 6, 7], 6);
        let g = f.clone();
        f.mul_one_minus_qe(2);
        assert_eq!(f, g.mul(&QSeries::from_i64(&[1, 0, -1], 6)));
        f.div_one_minus_qe(2);
        assert_eq!(f, g);
    }

    #[test]
    fn shift_up_extends_order() {
        let f = QSeries::from_i64(&[1, 1], 1);
        let shifted = f.shift_up(3);
        assert_eq!(shifted.order(), 4);
        assert_eq!(shifted, QSeries::from_i64(&[0, 0, 0, 1, 1], 4));
    }

    #[test]
    fn shift_trunc_drops_top() {
        let f = QSeries::from_i64(&[1, 2, 3], 2);
        assert_eq!(f.shift_trunc(1), QSeries::from_i64(&[0, 1, 2], 2));
        assert_eq!(f.shift_trunc(3), QSeries::zero(2));
        assert_eq!(f.shift_trunc(9), QSeries::zero(2));
    }

    #[test]
    fn first_mismatch_reports_smallest_exponent() {
        let f = QSeries::from_i64(&[1, 1, 2, 3], 3);
        let g = QSeries::from_i64(&[1, 1, 5, 3, 9], 4);
        let (e, lhs, rhs) = f.first_mismatch(&g).unwrap();
        assert_eq!(e, 2);
        assert_eq!(lhs, rat_int(2));
        assert_eq!(rhs, rat_int(5));
        assert_eq!(f.first_mismatch(&f.clone()), None);
        // Comparison is only up to the smaller order.
        let h = QSeries::from_i64(&[1, 1, 2, 3, 77], 4);
        assert_eq!(f.first_mismatch(&h), None);
        assert_eq!(f.compared_order(&h), 3);
    }

    #[test]
    fn ring_laws_on_seeded_random_inputs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let order = 14;
        let random_series = |rng: &mut rand_chacha::ChaCha8Rng| {
            let coeffs: Vec<i64> = (0..=order).map(|_| rng.gen_range(-9..=9)).collect();
            QSeries::from_i64(&coeffs, order)
        };
        for _ in 0..40 {
            let f = random_series(&mut rng);
            let g = random_series(&mut rng);
            let h = random_series(&mut rng);
            assert_eq!(f.add(&g), g.add(&f));
            assert_eq!(f.mul(&g), g.mul(&f));
            assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
            assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            assert_eq!(f.sub(&f), QSeries::zero(order));
        }
    }

    #[test]
    fn display_is_readable() {
        let f = QSeries::from_i64(&[1, -1, 0, 2], 3);
        assert_eq!(format!("{f}"), "1 - q + 2*q^3 + O(q^4)");
        assert_eq!(format!("{}", QSeries::zero(2)), "0 + O(q^3)");
    }
}
