//! Independent second route to `zeta(m, {1}_k)`: the family's generating
//! function
//!
//! ```text
//! sum_{k,l >= 0} x^(k+1) y^(l+1) zeta(l+2, {1}_k)
//!     = 1 - exp( sum_{n >= 2} (x^n + y^n - (x+y)^n)/n * zeta(n) )
//! ```
//!
//! realized with truncated bivariate formal power series whose
//! coefficients are [`ZetaPoly`] values. The identity is taken as stated
//! and cross-checked against the composition-sum route; it is not derived
//! here.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::exact::{binomial, factorial, Rational};
use crate::ring::ZetaPoly;

/// A bivariate formal power series truncated to total degree `<= cap`,
/// with [`ZetaPoly`] coefficients. Zero coefficients are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    cap: u32,
    coeffs: BTreeMap<(u32, u32), ZetaPoly>,
}

impl BiSeries {
    /// The zero series with the given truncation cap.
    pub fn new(cap: u32) -> Self {
        BiSeries {
            cap,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant series `1`.
    pub fn one(cap: u32) -> Self {
        let mut s = BiSeries::new(cap);
        s.add_coeff(0, 0, ZetaPoly::one());
        s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `x^i y^j` (zero if absent or beyond the cap).
    pub fn coefficient(&self, i: u32, j: u32) -> ZetaPoly {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in `(i, j)` order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&(u32, u32), &ZetaPoly)> {
        self.coeffs.iter()
    }

    /// Adds `p * x^i y^j`, dropping the slot if it cancels. Exponent pairs
    /// beyond the cap are discarded.
    pub fn add_coeff(&mut self, i: u32, j: u32, p: ZetaPoly) {
        if i + j > self.cap || p.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((i, j)).or_default();
        *slot = &*slot + &p;
        if slot.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let mut out = self.clone();
        out.cap = self.cap.min(other.cap);
        out.coeffs.retain(|&(i, j), _| i + j <= out.cap);
        for (&(i, j), p) in &other.coeffs {
            out.add_coeff(i, j, p.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> BiSeries {
        let mut out = BiSeries::new(self.cap);
        for (&(i, j), p) in &self.coeffs {
            out.add_coeff(i, j, p.scale(c));
        }
        out
    }

    /// Product truncated to the (smaller) cap.
    pub fn mul_truncated(&self, other: &BiSeries) -> BiSeries {
        let mut out = BiSeries::new(self.cap.min(other.cap));
        for (&(ia, ja), pa) in &self.coeffs {
            for (&(ib, jb), pb) in &other.coeffs {
                if ia + ib + ja + jb > out.cap {
                    continue;
                }
                out.add_coeff(ia + ib, ja + jb, pa * pb);
            }
        }
        out
    }
}

/// The log-side series
/// `S(x, y) = sum_{n=2}^{cap} zeta(n) * (x^n + y^n - (x+y)^n) / n`,
/// truncated to total degree `<= cap`. The pure `x^n` and `y^n` parts
/// cancel, so every surviving slot has both exponents `>= 1`.
pub fn log_series(cap: u32) -> BiSeries {
    assert!(cap >= 2, "log_series needs cap >= 2");
    let mut s = BiSeries::new(cap);
    for n in 2..=cap {
        let zn = ZetaPoly::generator(n);
        for i in 1..=(n - 1) {
            let c = Rational::new(-binomial(n, i as i64), BigInt::from(n));
            s.add_coeff(i, n - i, zn.scale(&c));
        }
    }
    s
}

/// `exp(s) = sum_j s^j / j!` truncated to the cap. Requires vanishing
/// constant and linear parts, so the sum is finite (`s^j` has minimal
/// total degree `2j`).
pub fn series_exp(s: &BiSeries) -> Result<BiSeries, Error> {
    if s.coeffs().any(|(&(i, j), _)| i + j <= 1) {
        return Err(Error::SeriesLowOrderTerms);
    }
    let mut acc = BiSeries::one(s.cap());
    let mut power = BiSeries::one(s.cap());
    for j in 1..=(s.cap() / 2) {
        power = power.mul_truncated(s);
        if power.is_zero() {
            break;
        }
        let inv_j = Rational::new(BigInt::one(), BigInt::from(j));
        power = power.scale(&inv_j);
        acc = acc.add(&power);
    }
    Ok(acc)
}

/// The table of coefficients of `1 - exp(log_series(cap))`. Building it
/// once and reading many coefficients amortizes the series exponential.
pub struct GfTable {
    series: BiSeries,
}

impl GfTable {
    pub fn new(cap: u32) -> Self {
        let exp = series_exp(&log_series(cap)).expect("log_series has no low-order terms");
        let mut series = BiSeries::new(cap);
        for (&(i, j), p) in exp.coeffs() {
            if (i, j) == (0, 0) {
                continue; // the constant term of exp is exactly 1
            }
            series.add_coeff(i, j, -p);
        }
        GfTable { series }
    }

    pub fn cap(&self) -> u32 {
        self.series.cap()
    }

    /// `zeta(l+2, {1}_k)` read off as the coefficient of
    /// `x^(k+1) y^(l+1)`; rejects weights beyond the cap.
    pub fn family_coefficient(&self, k: u32, l: u32) -> Result<ZetaPoly, Error> {
        let needed = k + l + 2;
        if needed > self.series.cap() {
            return Err(Error::SeriesCap {
                needed,
                cap: self.series.cap(),
            });
        }
        Ok(self.series.coefficient(k + 1, l + 1))
    }
}

/// One-shot convenience for [`GfTable::family_coefficient`].
pub fn gf_coefficient(k: u32, l: u32, cap: u32) -> Result<ZetaPoly, Error> {
    let needed = k + l + 2;
    if needed > cap {
        return Err(Error::SeriesCap { needed, cap });
    }
    GfTable::new(cap).family_coefficient(k, l)
}

/// `n!` as a rational, handy for series scaling in tests.
#[doc(hidden)]
pub fn factorial_rational(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}
