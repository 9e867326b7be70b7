use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use super::poly::{QPoly, RationalFunction};
use super::series::QSeries;
use super::{rat_int, rat_one};

/// Symbolic product  sign · q^shift · Π (1−q^e)^mult · Π (q^a;q^m)_∞^mult.
///
/// Finite factor exponents may be negative before `normalize()`; after it
/// every exponent is ≥ 1 and only the shift can be negative (a genuine
/// Laurent prefactor, rejected by `expand`). Infinite families always have
/// base a ≥ 1 and step m ≥ 1.
#[derive(Clone, PartialEq, Eq)]
pub struct FactoredProduct {
    sign: i8,
    shift: i64,
    finite: BTreeMap<i64, i64>,
    infinite: BTreeMap<(usize, usize), i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductError {
    /// Net q-shift is negative after normalization: the expansion would
    /// be a Laurent series, not a power series.
    NegativeShift { shift: i64 },
}

impl fmt::Display for ProductError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductError::NegativeShift { shift } => {
                write!(f, "product has negative net shift q^{shift} and is not a power series")
            }
        }
    }
}

impl Error for ProductError {}

impl FactoredProduct {
    pub fn one() -> Self {
        FactoredProduct {
            sign: 1,
            shift: 0,
            finite: BTreeMap::new(),
            infinite: BTreeMap::new(),
        }
    }

    /// sign · q^shift with no factors.
    pub fn monomial(sign: i8, shift: i64) -> Self {
        assert!(sign == 1 || sign == -1);
        FactoredProduct {
            sign,
            shift,
            finite: BTreeMap::new(),
            infinite: BTreeMap::new(),
        }
    }

    /// (q^a;q^m)_n as finite factors (1−q^{a+im}), i = 0..n−1.
    pub fn poch_finite(a: usize, m: usize, n: usize) -> Self {
        assert!(a >= 1 && m >= 1);
        let mut p = FactoredProduct::one();
        for i in 0..n {
            p.mul_factor((a + i * m) as i64, 1);
        }
        p
    }

    /// (q^a;q^m)_∞ as an infinite family.
    pub fn poch_infinite(a: usize, m: usize) -> Self {
        let mut p = FactoredProduct::one();
        p.mul_infinite(a, m, 1);
        p
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn finite_factors(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.finite.iter().map(|(&e, &m)| (e, m))
    }

    pub fn infinite_families(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.infinite.iter().map(|(&(a, m), &mu)| (a, m, mu))
    }

    /// Multiply in (1−q^e)^mult. e may be negative, never zero.
    pub fn mul_factor(&mut self, e: i64, mult: i64) {
        assert!(e != 0, "factor (1-q^0) is zero");
        let entry = self.finite.entry(e).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.finite.remove(&e);
        }
    }

    /// Multiply in (q^a;q^m)_∞^mult.
    pub fn mul_infinite(&mut self, a: usize, m: usize, mult: i64) {
        assert!(a >= 1 && m >= 1);
        let entry = self.infinite.entry((a, m)).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.infinite.remove(&(a, m));
        }
    }

    pub fn mul(&self, other: &FactoredProduct) -> FactoredProduct {
        let mut p = self.clone();
        p.sign *= other.sign;
        p.shift += other.shift;
        for (e, m) in other.finite_factors() {
            p.mul_factor(e, m);
        }
        for (a, m, mu) in other.infinite_families() {
            p.mul_infinite(a, m, mu);
        }
        p
    }

    /// Reciprocal: all multiplicities negate; 1/(−1) = −1 keeps the sign.
    pub fn inv(&self) -> FactoredProduct {
        FactoredProduct {
            sign: self.sign,
            shift: -self.shift,
            finite: self.finite.iter().map(|(&e, &m)| (e, -m)).collect(),
            infinite: self.infinite.iter().map(|(&k, &m)| (k, -m)).collect(),
        }
    }

    /// Rewrite every negative-exponent factor by
    /// (1 − q^{−e})^μ = (−1)^μ q^{−eμ} (1 − q^e)^μ, leaving only positive
    /// exponents. Idempotent; the expansion is unchanged wherever both
    /// the input and the output are defined.
    pub fn normalize(&self) -> FactoredProduct {
        let mut p = FactoredProduct {
            sign: self.sign,
            shift: self.shift,
            finite: BTreeMap::new(),
            infinite: self.infinite.clone(),
        };
        for (&e, &mu) in &self.finite {
            if e > 0 {
                p.mul_factor(e, mu);
            } else {
                if mu.rem_euclid(2) == 1 {
                    p.sign = -p.sign;
                }
                p.shift += e * mu;
                p.mul_factor(-e, mu);
            }
        }
        p
    }

    /// The product as an exact rational function, when it is one: None if
    /// any infinite family is present or the normalized net shift is
    /// negative.
    pub fn to_rational_function(&self) -> Option<RationalFunction> {
        let p = self.normalize();
        if !p.infinite.is_empty() || p.shift < 0 {
            return None;
        }
        let sign = if p.sign < 0 { rat_int(-1) } else { rat_one() };
        let mut num = QPoly::monomial(sign, p.shift as usize);
        let mut den = QPoly::one();
        for (e, mult) in p.finite_factors() {
            let factor = QPoly::one().sub(&QPoly::monomial(rat_one(), e as usize));
            let target = if mult > 0 { &mut num } else { &mut den };
            for _ in 0..mult.unsigned_abs() {
                *target = target.mul(&factor);
            }
        }
        Some(RationalFunction::new(num, den))
    }

    /// Exact truncated expansion. Normalizes first; errors if the net
    /// shift is negative.
    pub fn expand(&self, order: usize) -> Result<QSeries, ProductError> {
        let p = self.normalize();
        if p.shift < 0 {
            return Err(ProductError::NegativeShift { shift: p.shift });
        }
        let shift = p.shift as usize;
        if shift > order {
            return Ok(QSeries::zero(order));
        }
        // Window: expand the factor part at reduced order, shift up last.
        let reduced = order - shift;
        let mut f = QSeries::one(reduced);
        if p.sign < 0 {
            f = f.neg();
        }
        for (e, mult) in p.finite_factors() {
            let e = e as usize;
            if e > reduced {
                continue;
            }
            for _ in 0..mult.unsigned_abs() {
                if mult > 0 {
                    f.mul_one_minus_qe(e);
                } else {
                    f.div_one_minus_qe(e);
                }
            }
        }
        for (a, m, mult) in p.infinite_families() {
            let mut e = a;
            while e <= reduced {
                for _ in 0..mult.unsigned_abs() {
                    if mult > 0 {
                        f.mul_one_minus_qe(e);
                    } else {
                        f.div_one_minus_qe(e);
                    }
                }
                e += m;
            }
        }
        Ok(f.shift_up(shift))
    }
}

impl fmt::Debug for FactoredProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactoredProduct({self})")
    }
}

impl fmt::Display for FactoredProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = Vec::new();
        let mut den = Vec::new();
        if self.shift != 0 {
            num.push(format!("q^{}", self.shift));
        }
        for (e, m) in &self.finite {
            let target = if *m > 0 { &mut num } else { &mut den };
            let base = format!("(1-q^{e})");
            let a = m.unsigned_abs();
            target.push(if a == 1 { base } else { format!("{base}^{a}") });
        }
        for ((a, step), m) in &self.infinite {
            let target = if *m > 0 { &mut num } else { &mut den };
            let base = format!("(q^{a};q^{step})inf");
            let mu = m.unsigned_abs();
            target.push(if mu == 1 { base } else { format!("{base}^{mu}") });
        }
        let num_str = if num.is_empty() {
            "1".to_string()
        } else {
            num.join(" ")
        };
        let sign = if self.sign < 0 { "-" } else { "" };
        if den.is_empty() {
            write!(f, "{sign}{num_str}")
        } else {
            write!(f, "{sign}{num_str} / {}", den.join(" "))
        }
    }
}
