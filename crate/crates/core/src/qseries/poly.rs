use std::fmt;

use num::{BigRational, Signed, Zero};

use super::series::QSeries;
use super::{rat_int, rat_one, rat_zero};

/// Exact polynomial in q with rational coefficients; no truncation order.
/// Trailing zero coefficients are always trimmed, so the zero polynomial
/// has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(rat_one(), 0)
    }

    pub fn monomial(c: BigRational, e: usize) -> Self {
        let mut coeffs = vec![rat_zero(); e + 1];
        coeffs[e] = c;
        QPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(rat_zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|e| self.coeff(e) + other.coeff(e)).collect();
        QPoly::new(coeffs)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|e| self.coeff(e) - other.coeff(e)).collect();
        QPoly::new(coeffs)
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![rat_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPoly::new(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![rat_zero(); self.coeffs.len().saturating_sub(dd)];
        let mut top = rem.len();
        while top > dd {
            top -= 1;
            if rem[top].is_zero() {
                continue;
            }
            let factor = &rem[top] * &lead_inv;
            let shift = top - dd;
            for (k, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    let delta = dc * &factor;
                    rem[shift + k] -= delta;
                }
            }
            quo[shift] = factor;
        }
        (QPoly::new(quo), QPoly::new(rem))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.coeffs[a.degree().unwrap()].recip();
        a.scale(&lead)
    }

    /// Truncation to a QSeries of the given order.
    pub fn to_series(&self, order: usize) -> QSeries {
        QSeries::new(
            self.coeffs.iter().take(order + 1).cloned().collect(),
            order,
        )
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
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
                if a != rat_one() {
                    write!(f, "{a}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Gaussian binomial [n, m]_q by the q-Pascal recurrence
/// [n, m] = [n−1, m−1] + q^m [n−1, m]; exact polynomial, no division.
pub fn gauss_binomial_poly(n: usize, m: i64) -> QPoly {
    if m < 0 || m as usize > n {
        return QPoly::zero();
    }
    let m = m as usize;
    // row[j] = [r, j]_q while sweeping r upward.
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for r in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(QPoly::one());
        for j in 1..r.min(m + 1) {
            let shifted = row[j].mul(&QPoly::monomial(rat_one(), j));
            next.push(row[j - 1].add(&shifted));
        }
        if r <= m {
            next.push(QPoly::one());
        }
        row = next;
    }
    row[m].clone()
}

/// All Gaussian binomials [n, 0]_q through [n, n]_q from one q-Pascal
/// sweep; much cheaper than n+1 separate calls when a whole row is needed.
pub fn gauss_binomial_row(n: usize) -> Vec<QPoly> {
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for r in 1..=n {
        let mut next = Vec::with_capacity(r + 1);
        next.push(QPoly::one());
        for j in 1..r {
            let shifted = row[j].mul(&QPoly::monomial(rat_one(), j));
            next.push(row[j - 1].add(&shifted));
        }
        next.push(QPoly::one());
        row = next;
    }
    row
}

/// (q^a;q^m)_n as an exact polynomial.
pub fn poch_finite_poly(a: usize, m: usize, n: usize) -> QPoly {
    assert!(a >= 1 && m >= 1, "pochhammer base and step must be >= 1");
    let mut p = QPoly::one();
    for i in 0..n {
        let mut factor = QPoly::one();
        factor = factor.sub(&QPoly::monomial(rat_one(), a + i * m));
        p = p.mul(&factor);
    }
    p
}

/// Reduced ratio of two exact polynomials. The denominator is normalized
/// to constant term 1 when possible (the natural form for products of
/// (1−q^e) factors), otherwise to a monic leading coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: QPoly,
    denominator: QPoly,
}

impl RationalFunction {
    pub fn new(numerator: QPoly, denominator: QPoly) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        if numerator.is_zero() {
            return RationalFunction {
                numerator,
                denominator: QPoly::one(),
            };
        }
        let g = numerator.gcd(&denominator);
        let (mut num, r1) = numerator.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (mut den, r2) = denominator.div_rem(&g);
        debug_assert!(r2.is_zero());
        let c = if den.coeff(0).is_zero() {
            den.coeffs[den.degree().unwrap()].clone()
        } else {
            den.coeff(0)
        };
        let cinv = c.recip();
        num = num.scale(&cinv);
        den = den.scale(&cinv);
        RationalFunction {
            numerator: num,
            denominator: den,
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RationalFunction {
            numerator: p,
            denominator: QPoly::one(),
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &QPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Equality as rational functions, by cross-multiplication; does not
    /// rely on both sides being in the same reduced form.
    pub fn equivalent(&self, other: &RationalFunction) -> bool {
        self.numerator.mul(&other.denominator) == other.numerator.mul(&self.denominator)
    }

    /// Series expansion at the given order; requires a unit denominator
    /// constant term (the reduced forms used here always have one unless
    /// the function has a pole at q = 0).
    pub fn to_series(&self, order: usize) -> QSeries {
        let den = self.denominator.to_series(order);
        let inv = den
            .invert()
            .expect("rational function has a pole at q = 0");
        self.numerator.to_series(order).mul(&inv)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == QPoly::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_binomial_edge_cases() {
        assert_eq!(gauss_binomial_poly(5, 0), QPoly::one());
        assert_eq!(gauss_binomial_poly(5, 5), QPoly::one());
        assert_eq!(gauss_binomial_poly(5, -1), QPoly::zero());
        assert_eq!(gauss_binomial_poly(5, 6), QPoly::zero());
        assert_eq!(gauss_binomial_poly(0, 0), QPoly::one());
    }

    #[test]
    fn gauss_binomial_small_values() {
        assert_eq!(gauss_binomial_poly(2, 1), QPoly::from_i64(&[1, 1]));
        assert_eq!(
            gauss_binomial_poly(4, 2),
            QPoly::from_i64(&[1, 1, 2, 1, 1])
        );
    }

    #[test]
    fn gauss_binomial_matches_division_oracle() {
        // Independent route: (q;q)_n / ((q;q)_m (q;q)_{n-m}) by exact
        // polynomial division.
        for n in 0..=8usize {
            for m in 0..=n {
                let num = poch_finite_poly(1, 1, n);
                let den = poch_finite_poly(1, 1, m).mul(&poch_finite_poly(1, 1, n - m));
                let (quo, rem) = num.div_rem(&den);
                assert!(rem.is_zero(), "n={n} m={m}");
                assert_eq!(gauss_binomial_poly(n, m as i64), quo, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn gauss_binomial_symmetry_degree_and_positivity() {
        for n in 0..=10usize {
            for m in 0..=n {
                let p = gauss_binomial_poly(n, m as i64);
                assert_eq!(p, gauss_binomial_poly(n, (n - m) as i64));
                assert_eq!(p.degree(), Some(m * (n - m)));
                for c in p.coeffs() {
                    assert!(!c.is_negative());
                    assert!(c.is_integer());
                }
            }
        }
    }

    #[test]
    fn gauss_binomial_row_matches_single_entries() {
        for n in 0..=8usize {
            let row = gauss_binomial_row(n);
            assert_eq!(row.len(), n + 1);
            for m in 0..=n {
                assert_eq!(row[m], gauss_binomial_poly(n, m as i64), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = QPoly::from_i64(&[3, 0, -2, 1, 7]);
        let b = QPoly::from_i64(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // gcd((1-q^2)(1-q^3), (1-q^2)) = (1-q^2) up to monic scaling.
        let a = poch_finite_poly(2, 1, 2); // (1-q^2)(1-q^3)
        let b = QPoly::from_i64(&[1, 0, -1]);
        let g = a.gcd(&b);
        // monic form of 1-q^2 is q^2-1 scaled by -1... gcd is monic: q^2 - 1.
        let expected = QPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(g, expected);
    }

    #[test]
    fn rational_function_reduces() {
        // (1-q^2)/(1-q) = 1+q.
        let rf = RationalFunction::new(QPoly::from_i64(&[1, 0, -1]), QPoly::from_i64(&[1, -1]));
        assert_eq!(rf.numerator(), &QPoly::from_i64(&[1, 1]));
        assert_eq!(rf.denominator(), &QPoly::one());
    }

    #[test]
    fn rational_function_equivalence_by_cross_multiplication() {
        let a = RationalFunction::new(QPoly::from_i64(&[0, 0, 0, -1]), QPoly::from_i64(&[1, 0, 0, -1]));
        let b = RationalFunction::new(
            QPoly::from_i64(&[0, 0, 0, -2]),
            QPoly::from_i64(&[2, 0, 0, -2]),
        );
        assert!(a.equivalent(&b));
        let c = RationalFunction::new(QPoly::from_i64(&[0, 0, -1]), QPoly::from_i64(&[1, 0, 0, -1]));
        assert!(!a.equivalent(&c));
    }

    #[test]
    fn rational_function_series_expansion() {
        // -q^3/(1-q^3) = -q^3 - q^6 - q^9 - ...
        let rf = RationalFunction::new(QPoly::from_i64(&[0, 0, 0, -1]), QPoly::from_i64(&[1, 0, 0, -1]));
        let s = rf.to_series(9);
        assert_eq!(s, QSeries::from_i64(&[0, 0, 0, -1, 0, 0, -1, 0, 0, -1], 9));
    }

    #[test]
    fn display_forms() {
        assert_eq!(format!("{}", QPoly::from_i64(&[1, -1])), "1 - q");
        assert_eq!(format!("{}", QPoly::from_i64(&[0, 0, 2])), "2*q^2");
        assert_eq!(format!("{}", QPoly::zero()), "0");
    }
}
