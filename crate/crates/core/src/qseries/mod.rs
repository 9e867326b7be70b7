//! Exact truncated power-series arithmetic in one variable q, plus
//! symbolic factored products, exact polynomials and two-marker series.
//!
//! Provides:
//!   QSeries          truncated series with arbitrary-precision rational coefficients
//!   QPoly            exact polynomial (no truncation order)
//!   RationalFunction reduced ratio of two exact polynomials
//!   FactoredProduct  symbolic ±q^s · Π(1−q^e)^±1 · Π(q^a;q^m)_∞^±1
//!   XYSeries         series in q whose terms are graded by two markers x, y
//!   gauss_binomial   q-binomial coefficient via the q-Pascal recurrence
//!   poch_finite / poch_infinite   (q^a;q^m)_n and (q^a;q^m)_∞ as series

mod poly;
mod product;
mod series;
mod xy;

pub use poly::{gauss_binomial_poly, gauss_binomial_row, poch_finite_poly, QPoly, RationalFunction};
pub use product::{FactoredProduct, ProductError};
pub use series::{QSeries, SeriesError};
pub use xy::{Marker, XYSeries};

use num::BigRational;

/// (q^a; q^m)_n = Π_{i=0}^{n-1} (1 − q^{a+im}), truncated at `order`.
pub fn poch_finite(a: usize, m: usize, n: usize, order: usize) -> QSeries {
    assert!(a >= 1 && m >= 1, "pochhammer base and step must be >= 1");
    let mut f = QSeries::one(order);
    for i in 0..n {
        let e = a + i * m;
        if e > order {
            break;
        }
        f.mul_one_minus_qe(e);
    }
    f
}

/// (q^a; q^m)_∞ truncated at `order`: factors with a+im > order do not
/// contribute below q^{order+1}.
pub fn poch_infinite(a: usize, m: usize, order: usize) -> QSeries {
    assert!(a >= 1 && m >= 1, "pochhammer base and step must be >= 1");
    let mut f = QSeries::one(order);
    let mut e = a;
    while e <= order {
        f.mul_one_minus_qe(e);
        e += m;
    }
    f
}

/// Gaussian binomial [n, m]_q as an exact polynomial wrapped in a QSeries
/// whose order is the polynomial degree m(n−m). Zero for m < 0 or m > n.
pub fn gauss_binomial(n: usize, m: i64) -> QSeries {
    let p = gauss_binomial_poly(n, m);
    let deg = p.degree().unwrap_or(0);
    p.to_series(deg)
}

pub(crate) fn rat_zero() -> BigRational {
    BigRational::from_integer(0.into())
}

pub(crate) fn rat_one() -> BigRational {
    BigRational::from_integer(1.into())
}

pub(crate) fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}
