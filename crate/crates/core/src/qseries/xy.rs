use std::collections::BTreeMap;
use std::fmt;

use num::BigRational;

use super::series::QSeries;
use super::{poch_finite, rat_one};

/// Which of the two markers a pochhammer factor carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    X,
    Y,
}

/// Series in q graded by two commuting markers x, y: the term at key
/// (α, β) is the QSeries coefficient of x^α y^β. Keys are kept for all
/// α+β ≤ degree_cap; absent keys mean zero. Every stored series has the
/// same order.
#[derive(Clone, PartialEq, Eq)]
pub struct XYSeries {
    degree_cap: usize,
    order: usize,
    terms: BTreeMap<(usize, usize), QSeries>,
}

impl XYSeries {
    pub fn one(degree_cap: usize, order: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, 0), QSeries::one(order));
        XYSeries {
            degree_cap,
            order,
            terms,
        }
    }

    pub fn zero(degree_cap: usize, order: usize) -> Self {
        XYSeries {
            degree_cap,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of x^α y^β (zero series when absent).
    pub fn coeff(&self, alpha: usize, beta: usize) -> QSeries {
        self.terms
            .get(&(alpha, beta))
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.order))
    }

    /// Add `c`·x^α y^β into the series; ignored beyond the degree cap.
    pub fn add_term(&mut self, alpha: usize, beta: usize, c: &QSeries) {
        if alpha + beta > self.degree_cap {
            return;
        }
        let c = if c.order() > self.order {
            c.truncate(self.order)
        } else {
            assert!(c.order() == self.order, "term order below series order");
            c.clone()
        };
        match self.terms.get_mut(&(alpha, beta)) {
            Some(t) => *t = t.add(&c),
            None => {
                self.terms.insert((alpha, beta), c);
            }
        }
    }

    pub fn add(&self, other: &XYSeries) -> XYSeries {
        let mut out = XYSeries::zero(
            self.degree_cap.min(other.degree_cap),
            self.order.min(other.order),
        );
        for (&(a, b), f) in &self.terms {
            out.add_term(a, b, &f.truncate(out.order));
        }
        for (&(a, b), f) in &other.terms {
            out.add_term(a, b, &f.truncate(out.order));
        }
        out
    }

    /// Product; marker pairs whose total degree exceeds the cap are
    /// dropped, q-orders truncate to the minimum.
    pub fn mul(&self, other: &XYSeries) -> XYSeries {
        let cap = self.degree_cap.min(other.degree_cap);
        let order = self.order.min(other.order);
        let mut out = XYSeries::zero(cap, order);
        for (&(a1, b1), f) in &self.terms {
            if a1 + b1 > cap || f.is_zero() {
                continue;
            }
            for (&(a2, b2), g) in &other.terms {
                if a1 + b1 + a2 + b2 > cap || g.is_zero() {
                    continue;
                }
                let prod = f.truncate(order).mul(&g.truncate(order));
                out.add_term(a1 + a2, b1 + b2, &prod);
            }
        }
        out
    }

    /// Expansion of 1/(t·q^a; q^m)_∞ where t is the chosen marker:
    /// the coefficient of t^α is q^{aα}/(q^m;q^m)_α, windowed so the
    /// division happens at reduced order.
    pub fn from_pochhammer_inverse(
        marker: Marker,
        a: usize,
        m: usize,
        order: usize,
        degree_cap: usize,
    ) -> Self {
        assert!(a >= 1 && m >= 1);
        let mut out = XYSeries::zero(degree_cap, order);
        for alpha in 0..=degree_cap {
            let min_exp = a * alpha;
            let key = match marker {
                Marker::X => (alpha, 0),
                Marker::Y => (0, alpha),
            };
            if min_exp > order {
                out.add_term(key.0, key.1, &QSeries::zero(order));
                continue;
            }
            let reduced = order - min_exp;
            let inner = poch_finite(m, m, alpha, reduced)
                .invert()
                .expect("pochhammer has unit constant term");
            out.add_term(key.0, key.1, &inner.shift_up(min_exp));
        }
        out
    }

    /// First difference against `other`, scanning keys by total degree,
    /// then x-degree, then q-exponent; compares all keys with
    /// α+β ≤ min(degree caps) up to min(orders).
    pub fn first_mismatch(&self, other: &XYSeries) -> Option<XYMismatch> {
        let cap = self.degree_cap.min(other.degree_cap);
        let order = self.order.min(other.order);
        for total in 0..=cap {
            for alpha in (0..=total).rev() {
                let beta = total - alpha;
                let lhs = self.coeff(alpha, beta).truncate(order);
                let rhs = other.coeff(alpha, beta).truncate(order);
                if let Some((e, l, r)) = lhs.first_mismatch(&rhs) {
                    return Some(XYMismatch {
                        alpha,
                        beta,
                        exponent: e,
                        lhs: l,
                        rhs: r,
                    });
                }
            }
        }
        None
    }
}

/// Location and values of the first differing coefficient of two
/// XYSeries: the x^α y^β term differs at q^exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XYMismatch {
    pub alpha: usize,
    pub beta: usize,
    pub exponent: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl fmt::Debug for XYSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "XYSeries(cap {}, order {}) {{", self.degree_cap, self.order)?;
        for (&(a, b), s) in &self.terms {
            if !s.is_zero() {
                writeln!(f, "  x^{a} y^{b}: {s}")?;
            }
        }
        write!(f, "}}")
    }
}

impl XYSeries {
    /// Specialize both markers to 1, collapsing to a plain QSeries.
    pub fn collapse_markers(&self) -> QSeries {
        let mut total = QSeries::zero(self.order);
        for s in self.terms.values() {
            total = total.add(s);
        }
        total
    }

    /// Multiply by scalar·x^da y^db q^ds (markers shift the grading).
    pub fn shift_markers(&self, da: usize, db: usize, ds: usize, scalar: &BigRational) -> XYSeries {
        let mut out = XYSeries::zero(self.degree_cap, self.order);
        for (&(a, b), s) in &self.terms {
            if a + da + b + db > self.degree_cap {
                continue;
            }
            let shifted = s.shift_trunc(ds);
            let scaled = if *scalar == rat_one() {
                shifted
            } else {
                shifted.scale(scalar)
            };
            out.add_term(a + da, b + db, &scaled);
        }
        out
    }
}
