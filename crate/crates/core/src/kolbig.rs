//! Exact reduction of `zeta(m, {1}_k)` to a [`ZetaPoly`] through the
//! classical composition-sum formula (Kolbig) for the log-power integral
//!
//! ```text
//! J(k, l) = int_0^1 (-ln(1-x))^k / (1-x) * (-ln x)^l dx
//!         = k! l! * sum_{p=1}^{l} (-1)^(p+1)/p! *
//!           sum_{t} H_l(t_1..t_p) / (t_1 ... t_p) * zeta(t_1) ... zeta(t_p)
//! ```
//!
//! where `t` runs over ordered tuples with `t_i >= 2` summing to
//! `k + l + 1`, each tuple counted once, and
//! `H_l(t) = sum over (l_i), 1 <= l_i <= t_i - 1, sum l_i = l, of
//! prod C(t_i, l_i)`. The same integral equals `k! l! zeta(l+1, {1}_k)`,
//! which is what makes the reduction work.
//!
//! The ordered-tuple convention is validated by the regression values
//! `zeta(2,1) = zeta(3)`, `zeta(3,1) = zeta(4)/4` (after even
//! normalization) and `zeta(4,1) = 2 zeta(5) - zeta(2) zeta(3)`, and by
//! the duality and cross-oracle suites; a multiset convention fails all
//! of them at depth >= 2 weights.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::exact::{binomial, factorial, Rational};
use crate::ring::{ZetaMonomial, ZetaPoly};

/// An ordered tuple of positive integers.
pub type Composition = Vec<u32>;

/// All ordered tuples `(t_1, ..., t_p)` with `t_i >= 2` and
/// `sum t_i = total`; empty when `total < 2 * parts`.
pub fn compositions_min2(total: u32, parts: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts as usize);
    rec_min2(total, parts, &mut cur, &mut out);
    out
}

fn rec_min2(remaining: u32, slots: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if remaining < 2 * slots {
        return;
    }
    // leave at least 2 for every later slot
    let max = remaining - 2 * (slots - 1);
    for t in 2..=max {
        cur.push(t);
        rec_min2(remaining - t, slots - 1, cur, out);
        cur.pop();
    }
}

/// All ordered tuples `(l_1, ..., l_p)` with `1 <= l_i <= bounds[i]` and
/// `sum l_i = total`.
pub fn bounded_compositions(total: u32, bounds: &[u32]) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(bounds.len());
    rec_bounded(total, bounds, &mut cur, &mut out);
    out
}

fn rec_bounded(remaining: u32, bounds: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
    match bounds.split_first() {
        None => {
            if remaining == 0 {
                out.push(cur.clone());
            }
        }
        Some((&b, rest)) => {
            let slots_left = rest.len() as u32;
            if remaining < 1 + slots_left {
                return;
            }
            let hi = b.min(remaining - slots_left);
            for v in 1..=hi {
                cur.push(v);
                rec_bounded(remaining - v, rest, cur, out);
                cur.pop();
            }
        }
    }
}

/// The binomial sum `H_l(t_1, ..., t_p)`: over all `(l_i)` with
/// `1 <= l_i <= t_i - 1` summing to `l`, the product of `C(t_i, l_i)`.
/// Zero when no such tuple exists.
pub fn h_sum(l: u32, t: &[u32]) -> BigInt {
    let bounds: Vec<u32> = t.iter().map(|&ti| ti - 1).collect();
    let mut acc = BigInt::zero();
    for li in bounded_compositions(l, &bounds) {
        let mut prod = BigInt::from(1);
        for (&ti, &lv) in t.iter().zip(li.iter()) {
            prod *= binomial(ti, lv as i64);
        }
        acc += prod;
    }
    acc
}

/// The exact value of `int_0^1 (-ln(1-x))^k/(1-x) * (-ln x)^l dx` as a
/// weight-homogeneous [`ZetaPoly`] of weight `k + l + 1`. Rejects `l = 0`.
pub fn integral(k: u32, l: u32) -> Result<ZetaPoly, Error> {
    if l == 0 {
        return Err(Error::ZeroLogExponent);
    }
    let total = k + l + 1;
    let mut bracket = ZetaPoly::zero();
    for p in 1..=l {
        if 2 * p > total {
            break;
        }
        let sign = if p % 2 == 1 { 1 } else { -1 };
        let p_fact = factorial(p);
        for t in compositions_min2(total, p) {
            let h = h_sum(l, &t);
            if h.is_zero() {
                continue;
            }
            let t_prod: BigInt = t.iter().map(|&x| BigInt::from(x)).product();
            let coeff = Rational::new(BigInt::from(sign) * h, p_fact.clone() * t_prod);
            bracket.add_term(ZetaMonomial::from_args(t.iter().copied()), coeff);
        }
    }
    let prefactor = Rational::from_integer(factorial(k) * factorial(l));
    Ok(bracket.scale(&prefactor))
}

/// `zeta(m, {1}_k)` as an exact weight-`(m+k)` polynomial in ordinary
/// zeta values: the integral above with `l = m - 1`, divided by
/// `k! (m-1)!`. Rejects `m < 2`.
pub fn reduce_family(m: u32, k: u32) -> Result<ZetaPoly, Error> {
    if m < 2 {
        return Err(Error::InadmissibleIndex { m });
    }
    let l = m - 1;
    let j = integral(k, l)?;
    let scale = Rational::new(BigInt::from(1), factorial(k) * factorial(l));
    Ok(j.scale(&scale))
}

/// The triangle integral `I_n = n! * sum_{k=0}^{n} zeta(n-k+2, {1}_k)` as
/// an exact weight-`(n+2)` polynomial in ordinary zeta values.
pub fn reduce_triangle(n: u32) -> ZetaPoly {
    let mut acc = ZetaPoly::zero();
    for k in 0..=n {
        let fam = reduce_family(n - k + 2, k).expect("m = n - k + 2 >= 2");
        acc = &acc + &fam;
    }
    acc.scale(&Rational::from_integer(factorial(n)))
}

/// A write-once memo for [`reduce_family`] keyed by `(m, k)`, for callers
/// that revisit indices (duality pairs, verification sweeps).
#[derive(Default)]
pub struct ReductionCache {
    map: BTreeMap<(u32, u32), ZetaPoly>,
}

impl ReductionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn family(&mut self, m: u32, k: u32) -> Result<ZetaPoly, Error> {
        if let Some(p) = self.map.get(&(m, k)) {
            return Ok(p.clone());
        }
        let p = reduce_family(m, k)?;
        self.map.insert((m, k), p.clone());
        Ok(p)
    }

    pub fn triangle(&mut self, n: u32) -> ZetaPoly {
        let mut acc = ZetaPoly::zero();
        for k in 0..=n {
            let fam = self.family(n - k + 2, k).expect("m >= 2");
            acc = &acc + &fam;
        }
        acc.scale(&Rational::from_integer(factorial(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::ring::Weight;
    use alloc::vec;

    #[test]
    fn compositions_min2_examples() {
        assert_eq!(compositions_min2(4, 2), vec![vec![2, 2]]);
        assert_eq!(compositions_min2(5, 2), vec![vec![2, 3], vec![3, 2]]);
        assert!(compositions_min2(3, 2).is_empty());
        // exhaustive enumeration oracle for (7, 3): parts >= 2 summing to 7
        let got = compositions_min2(7, 3);
        let expect = vec![vec![2, 2, 3], vec![2, 3, 2], vec![3, 2, 2]];
        assert_eq!(got, expect);
    }

    #[test]
    fn bounded_compositions_examples() {
        assert_eq!(bounded_compositions(2, &[1, 1]), vec![vec![1, 1]]);
        assert_eq!(bounded_compositions(2, &[3]), vec![vec![2]]);
        assert_eq!(bounded_compositions(3, &[2, 2]), vec![vec![1, 2], vec![2, 1]]);
        assert!(bounded_compositions(3, &[1, 1]).is_empty());
        assert!(bounded_compositions(1, &[0]).is_empty());
    }

    #[test]
    fn h_sum_examples() {
        assert_eq!(h_sum(1, &[3]), BigInt::from(3));
        assert_eq!(h_sum(2, &[4]), BigInt::from(6));
        assert_eq!(h_sum(2, &[2, 2]), BigInt::from(4));
        // no valid inner tuple: l = 4 but max sum of l_i is (2-1)+(3-1) = 3
        assert_eq!(h_sum(4, &[2, 3]), BigInt::zero());
    }

    fn z(s: u32) -> ZetaPoly {
        ZetaPoly::generator(s)
    }

    #[test]
    fn integral_base_cases() {
        assert_eq!(integral(0, 1).unwrap(), z(2));
        assert_eq!(integral(1, 1).unwrap(), z(3));
        // hand enumeration: p=1 gives (3/2) zeta(4), p=2 gives -(1/2) zeta(2)^2,
        // times k! l! = 2
        let expect = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(4), rat(3, 1)),
            (ZetaMonomial::from_args([2, 2]), rat(-1, 1)),
        ]);
        assert_eq!(integral(1, 2).unwrap(), expect);
        assert!(matches!(integral(3, 0), Err(Error::ZeroLogExponent)));
    }

    #[test]
    fn reduce_family_known_values() {
        // Euler: zeta(2,1) = zeta(3)
        assert_eq!(reduce_family(2, 1).unwrap(), z(3));
        // zeta(3,1) = (3/2) zeta(4) - (1/2) zeta(2)^2
        let expect = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(4), rat(3, 2)),
            (ZetaMonomial::from_args([2, 2]), rat(-1, 2)),
        ]);
        assert_eq!(reduce_family(3, 1).unwrap(), expect);
        // zeta(2,1,1) = zeta(4)
        assert_eq!(reduce_family(2, 2).unwrap(), z(4));
        // zeta(4,1) = 2 zeta(5) - zeta(2) zeta(3)
        let expect = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(5), rat(2, 1)),
            (ZetaMonomial::from_args([3, 2]), rat(-1, 1)),
        ]);
        assert_eq!(reduce_family(4, 1).unwrap(), expect);
        assert!(matches!(
            reduce_family(1, 3),
            Err(Error::InadmissibleIndex { m: 1 })
        ));
    }

    #[test]
    fn reduce_family_normalized_values() {
        // zeta(3,1) normalizes to (1/10) zeta(2)^2, i.e. zeta(4)/4
        assert_eq!(
            reduce_family(3, 1).unwrap().normalize_even(),
            ZetaPoly::monomial(ZetaMonomial::from_args([2, 2]), rat(1, 10))
        );
        // zeta(2,1,1) normalizes to (2/5) zeta(2)^2, i.e. zeta(4)
        assert_eq!(
            reduce_family(2, 2).unwrap().normalize_even(),
            ZetaPoly::monomial(ZetaMonomial::from_args([2, 2]), rat(2, 5))
        );
    }

    #[test]
    fn integral_consistency_with_family() {
        for (k, l) in [(0u32, 1u32), (1, 1), (2, 2), (1, 3), (3, 2)] {
            let lhs = integral(k, l).unwrap();
            let scale = Rational::from_integer(factorial(k) * factorial(l));
            let rhs = reduce_family(l + 1, k).unwrap().scale(&scale);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reduce_triangle_small_values() {
        assert_eq!(reduce_triangle(0), z(2));
        assert_eq!(reduce_triangle(1), z(3).scale(&rat(2, 1)));
        // raw form of I_2 before even normalization: 7 zeta(4) - zeta(2)^2
        let i2 = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(4), rat(7, 1)),
            (ZetaMonomial::from_args([2, 2]), rat(-1, 1)),
        ]);
        assert_eq!(reduce_triangle(2), i2);
        let i3 = ZetaPoly::from_terms([
            (ZetaMonomial::zeta(5), rat(36, 1)),
            (ZetaMonomial::from_args([3, 2]), rat(-12, 1)),
        ]);
        assert_eq!(reduce_triangle(3), i3);
    }

    #[test]
    fn homogeneity_small_weights() {
        for m in 2..=8u32 {
            for k in 0..=(8 - m) {
                let p = reduce_family(m, k).unwrap();
                assert_eq!(p.weight(), Some(Weight::Homogeneous(m + k)));
            }
        }
    }

    #[test]
    fn cache_agrees_with_direct() {
        let mut cache = ReductionCache::new();
        assert_eq!(cache.family(3, 2).unwrap(), reduce_family(3, 2).unwrap());
        assert_eq!(cache.family(3, 2).unwrap(), reduce_family(3, 2).unwrap());
        assert_eq!(cache.triangle(4), reduce_triangle(4));
    }
}
