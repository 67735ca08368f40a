//! The commutative polynomial ring over [`Rational`] generated by formal
//! symbols `zeta(s)`, `s >= 2`, graded by weight (the sum of the arguments
//! of a monomial's generators).
//!
//! After [`ZetaPoly::normalize_even`] the generators in play are
//! `{zeta(2), zeta(3), zeta(5), zeta(7), ...}`: every even zeta beyond
//! `zeta(2)` is rewritten as a rational multiple of a power of `zeta(2)`,
//! which makes equality of reductions a structural comparison despite the
//! relations among even zeta values. No conjectural odd-zeta relations are
//! applied; after normalization the generators are treated as
//! algebraically independent.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{bernoulli, factorial, Rational};

/// A formal product of `zeta(s)` generators, stored as the multiset of
/// arguments sorted in descending order. The empty product is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZetaMonomial {
    args: Vec<u32>,
}

impl ZetaMonomial {
    /// The unit monomial `1`.
    pub fn one() -> Self {
        ZetaMonomial { args: Vec::new() }
    }

    /// The single generator `zeta(s)`. Panics if `s < 2`.
    pub fn zeta(s: u32) -> Self {
        assert!(s >= 2, "zeta generator argument must be >= 2, got {s}");
        ZetaMonomial { args: alloc::vec![s] }
    }

    /// A product of generators from an arbitrary argument multiset.
    /// Panics if any argument is `< 2`.
    pub fn from_args<I: IntoIterator<Item = u32>>(args: I) -> Self {
        let mut args: Vec<u32> = args.into_iter().collect();
        for &s in &args {
            assert!(s >= 2, "zeta generator argument must be >= 2, got {s}");
        }
        args.sort_unstable_by(|a, b| b.cmp(a));
        ZetaMonomial { args }
    }

    /// Generator arguments, sorted descending.
    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn is_one(&self) -> bool {
        self.args.is_empty()
    }

    /// Sum of the generator arguments; the unit has weight 0.
    pub fn weight(&self) -> u32 {
        self.args.iter().sum()
    }

    /// Product of two monomials: multiset union of the arguments.
    pub fn mul(&self, other: &Self) -> Self {
        let mut args = Vec::with_capacity(self.args.len() + other.args.len());
        args.extend_from_slice(&self.args);
        args.extend_from_slice(&other.args);
        args.sort_unstable_by(|a, b| b.cmp(a));
        ZetaMonomial { args }
    }
}

// Ordered by weight, then lexicographically on the descending argument
// list; gives a deterministic term order for serialization.
impl Ord for ZetaMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.args.cmp(&other.args))
    }
}

impl PartialOrd for ZetaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.args.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.args.len() {
            let s = self.args[i];
            let mut run = 1;
            while i + run < self.args.len() && self.args[i + run] == s {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "zeta({s})")?;
            } else {
                write!(f, "zeta({s})^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Weight classification of a nonzero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// All monomials share this weight.
    Homogeneous(u32),
    /// Monomials of different weights are present.
    Mixed,
}

/// A finite rational-linear combination of [`ZetaMonomial`]s. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZetaPoly {
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl ZetaPoly {
    pub fn zero() -> Self {
        ZetaPoly::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        ZetaPoly::constant(Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        ZetaPoly::monomial(ZetaMonomial::one(), c)
    }

    /// The generator `zeta(s)` with coefficient 1.
    pub fn generator(s: u32) -> Self {
        ZetaPoly::monomial(ZetaMonomial::zeta(s), Rational::one())
    }

    /// A single term `c * m` (empty if `c == 0`).
    pub fn monomial(m: ZetaMonomial, c: Rational) -> Self {
        let mut p = ZetaPoly::zero();
        p.add_term(m, c);
        p
    }

    /// Accumulates terms, dropping anything that cancels to zero.
    pub fn from_terms<I: IntoIterator<Item = (ZetaMonomial, Rational)>>(terms: I) -> Self {
        let mut p = ZetaPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: ZetaMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&ZetaMonomial, &Rational)> {
        self.terms.iter()
    }

    /// The coefficient of `m` (zero if absent).
    pub fn coefficient(&self, m: &ZetaMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> ZetaPoly {
        if c.is_zero() {
            return ZetaPoly::zero();
        }
        ZetaPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, r)| (m.clone(), r * c))
                .collect(),
        }
    }

    /// Common weight of all monomials, `Mixed` if inhomogeneous, `None`
    /// for the zero polynomial (whose weight is undefined).
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.terms.keys();
        let first = it.next()?.weight();
        for m in it {
            if m.weight() != first {
                return Some(Weight::Mixed);
            }
        }
        Some(Weight::Homogeneous(first))
    }

    /// Rewrites every generator `zeta(2n)`, `n >= 2`, as
    /// `even_zeta_ratio(n) * zeta(2)^n` and recollects. Odd-argument
    /// generators and `zeta(2)` itself are untouched. Idempotent,
    /// weight-preserving, and value-preserving.
    pub fn normalize_even(&self) -> ZetaPoly {
        let mut out = ZetaPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut args: Vec<u32> = Vec::with_capacity(m.args().len());
            for &s in m.args() {
                if s > 2 && s % 2 == 0 {
                    let n = s / 2;
                    coeff *= even_zeta_ratio(n);
                    args.extend(core::iter::repeat(2).take(n as usize));
                } else {
                    args.push(s);
                }
            }
            out.add_term(ZetaMonomial::from_args(args), coeff);
        }
        out
    }

    /// The inverse presentation step for display: a monomial that is a
    /// pure power `zeta(2)^j`, `j >= 2`, becomes `zeta(2j)` with the
    /// coefficient divided by `even_zeta_ratio(j)`. Mixed monomials (any
    /// factor other than `zeta(2)`) are left alone, so the classical
    /// one-generator form such as `(9/2)*zeta(4)` is recovered where it
    /// exists.
    pub fn compact_even(&self) -> ZetaPoly {
        let mut out = ZetaPoly::zero();
        for (m, c) in &self.terms {
            let j = m.args().len() as u32;
            if j >= 2 && m.args().iter().all(|&s| s == 2) {
                out.add_term(ZetaMonomial::zeta(2 * j), c / even_zeta_ratio(j));
            } else {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}

/// The exact ratio `zeta(2n) / zeta(2)^n` as a rational:
/// `(-1)^(n+1) * B_{2n} * 2^(2n) * 6^n / (2 * (2n)!)`.
pub fn even_zeta_ratio(n: u32) -> Rational {
    assert!(n >= 1, "even_zeta_ratio needs n >= 1");
    let b = bernoulli(2 * n);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let num = BigInt::from(sign) * (BigInt::one() << (2 * n)) * BigInt::from(6u32).pow(n);
    let den = BigInt::from(2) * factorial(2 * n);
    b * Rational::new(num, den)
}

impl Add<&ZetaPoly> for &ZetaPoly {
    type Output = ZetaPoly;
    fn add(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&ZetaPoly> for &ZetaPoly {
    type Output = ZetaPoly;
    fn sub(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &ZetaPoly {
    type Output = ZetaPoly;
    fn neg(self) -> ZetaPoly {
        ZetaPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul<&ZetaPoly> for &ZetaPoly {
    type Output = ZetaPoly;
    fn mul(self, rhs: &ZetaPoly) -> ZetaPoly {
        let mut out = ZetaPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for ZetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Leading (heaviest) term first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else if a.is_integer() {
                write!(f, "{a}*{m}")?;
            } else {
                write!(f, "({a})*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use alloc::string::ToString;

    fn z(s: u32) -> ZetaPoly {
        ZetaPoly::generator(s)
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = &z(3) + &z(3).scale(&rat(-1, 1));
        assert!(p.is_zero());
    }

    #[test]
    fn add_keeps_distinct_terms() {
        let p = &z(2) + &z(3);
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn add_partial_cancellation() {
        // (3/2) z4 + (-1/2) z2^2 + (1/2) z2^2 = (3/2) z4
        let z2sq = &z(2) * &z(2);
        let p = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(4), rat(3, 2)),
            (ZetaMonomial::from_args([2, 2]), rat(-1, 2)),
        ]);
        let q = &p + &z2sq.scale(&rat(1, 2));
        assert_eq!(q, z(4).scale(&rat(3, 2)));
    }

    #[test]
    fn mul_merges_args_and_adds_weight() {
        let p = &z(2) * &z(3);
        let (m, c) = p.terms().next().unwrap();
        assert_eq!(m.args(), &[3, 2]);
        assert!(c.is_one());
        assert_eq!(p.weight(), Some(Weight::Homogeneous(5)));

        let sq = &z(2) * &z(2);
        assert_eq!(sq.weight(), Some(Weight::Homogeneous(4)));
    }

    #[test]
    fn difference_of_squares() {
        // (z2 + z3)(z2 - z3) = z2^2 - z3^2, expanded by hand
        let a = &z(2) + &z(3);
        let b = &z(2) - &z(3);
        let expect = &(&z(2) * &z(2)) - &(&z(3) * &z(3));
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn even_ratio_values() {
        assert_eq!(even_zeta_ratio(1), rat(1, 1));
        assert_eq!(even_zeta_ratio(2), rat(2, 5));
        assert_eq!(even_zeta_ratio(3), rat(8, 35));
    }

    #[test]
    fn normalize_even_examples() {
        // zeta(4) -> (2/5) zeta(2)^2
        let n4 = z(4).normalize_even();
        assert_eq!(
            n4,
            ZetaPoly::monomial(ZetaMonomial::from_args([2, 2]), rat(2, 5))
        );
        // zeta(6) -> (8/35) zeta(2)^3
        let n6 = z(6).normalize_even();
        assert_eq!(
            n6,
            ZetaPoly::monomial(ZetaMonomial::from_args([2, 2, 2]), rat(8, 35))
        );
        // odd generators fixed
        assert_eq!(z(3).normalize_even(), z(3));
    }

    #[test]
    fn normalize_even_idempotent_and_weight_preserving() {
        let p = ZetaPoly::from_terms([
            (ZetaMonomial::from_args([6]), rat(237, 2)),
            (ZetaMonomial::from_args([3, 3]), rat(-48, 1)),
        ]);
        let n = p.normalize_even();
        assert_eq!(n, n.normalize_even());
        assert_eq!(n.weight(), Some(Weight::Homogeneous(6)));
    }

    #[test]
    fn compact_even_is_display_inverse() {
        let p = ZetaPoly::from_terms([
            (ZetaMonomial::from_args([4]), rat(7, 1)),
            (ZetaMonomial::from_args([2, 2]), rat(-1, 1)),
        ]);
        // 7 z4 - z2^2 normalizes to (9/5) z2^2 and compacts to (9/2) z4
        let compact = p.normalize_even().compact_even();
        assert_eq!(compact, z(4).scale(&rat(9, 2)));
    }

    #[test]
    fn weight_reporting() {
        let i3 = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(5), rat(36, 1)),
            (ZetaMonomial::from_args([3, 2]), rat(-12, 1)),
        ]);
        assert_eq!(i3.weight(), Some(Weight::Homogeneous(5)));
        assert_eq!(
            z(4).scale(&rat(9, 2)).weight(),
            Some(Weight::Homogeneous(4))
        );
        assert_eq!((&z(2) + &z(3)).weight(), Some(Weight::Mixed));
        assert_eq!(ZetaPoly::zero().weight(), None);
    }

    #[test]
    fn display_format() {
        let i3 = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(5), rat(36, 1)),
            (ZetaMonomial::from_args([3, 2]), rat(-12, 1)),
        ]);
        assert_eq!(i3.to_string(), "36*zeta(5) - 12*zeta(3)*zeta(2)");
        let p = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(4), rat(3, 2)),
            (ZetaMonomial::from_args([2, 2]), rat(-1, 2)),
        ]);
        assert_eq!(p.to_string(), "(3/2)*zeta(4) - (1/2)*zeta(2)^2");
        assert_eq!(ZetaPoly::zero().to_string(), "0");
        assert_eq!(z(3).to_string(), "zeta(3)");
        assert_eq!((-&z(3)).to_string(), "-zeta(3)");
    }
}
