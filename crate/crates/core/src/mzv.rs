//! The MZV index family `(m, {1}_k)`, its duality map, and the formal
//! MZV combination whose value is the triangle integral `I_n`.
//!
//! `zeta(s_1, ..., s_l) = sum over n_1 > ... > n_l >= 1 of
//! 1/(n_1^{s_1} ... n_l^{s_l})`; an index is admissible when `s_1 >= 2`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::exact::{factorial, Rational};
use crate::error::Error;

/// An admissible multiple zeta index `(s_1, ..., s_l)`: `s_1 >= 2`,
/// every part `>= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MzvIndex {
    parts: Vec<u32>,
}

impl MzvIndex {
    /// Validates admissibility.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        match parts.first() {
            Some(&m) if m >= 2 && parts.iter().all(|&p| p >= 1) => Ok(MzvIndex { parts }),
            Some(&m) => Err(Error::InadmissibleIndex { m }),
            None => Err(Error::InadmissibleIndex { m: 0 }),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn depth(&self) -> u32 {
        self.parts.len() as u32
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A finite rational-linear combination of MZV indices, kept in insertion
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MzvCombination {
    terms: Vec<(Rational, MzvIndex)>,
}

impl MzvCombination {
    pub fn terms(&self) -> &[(Rational, MzvIndex)] {
        &self.terms
    }
}

impl fmt::Display for MzvCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, idx)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{idx}")?;
            } else if c.is_integer() {
                write!(f, "{c}*{idx}")?;
            } else {
                write!(f, "({c})*{idx}")?;
            }
        }
        Ok(())
    }
}

/// The index `(m, 1, ..., 1)` with `k` trailing ones: weight `m + k`,
/// depth `k + 1`. Rejects `m < 2`.
pub fn family_index(m: u32, k: u32) -> Result<MzvIndex, Error> {
    if m < 2 {
        return Err(Error::InadmissibleIndex { m });
    }
    let mut parts = Vec::with_capacity(k as usize + 1);
    parts.push(m);
    parts.extend(core::iter::repeat(1).take(k as usize));
    Ok(MzvIndex { parts })
}

/// The dual index of `(m, {1}_k)` within the same family:
/// `(k + 2, {1}_{m-2})`, of equal weight. Applying the map twice returns
/// the original index.
pub fn dual_family(m: u32, k: u32) -> Result<MzvIndex, Error> {
    if m < 2 {
        return Err(Error::InadmissibleIndex { m });
    }
    family_index(k + 2, m - 2)
}

/// The combination `sum_{k=0}^{n} n! * zeta(n-k+2, {1}_k)` whose value is
/// the triangle integral `I_n`: `n + 1` terms, all of weight `n + 2`, in
/// increasing `k` order.
pub fn triangle_combination(n: u32) -> MzvCombination {
    let coeff = Rational::from_integer(factorial(n));
    let terms = (0..=n)
        .map(|k| {
            let idx = family_index(n - k + 2, k).expect("n - k + 2 >= 2");
            (coeff.clone(), idx)
        })
        .collect();
    MzvCombination { terms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;
    use alloc::string::ToString;

    #[test]
    fn family_index_examples() {
        assert_eq!(family_index(2, 0).unwrap().parts(), &[2]);
        assert_eq!(family_index(3, 1).unwrap().parts(), &[3, 1]);
        assert_eq!(family_index(2, 2).unwrap().parts(), &[2, 1, 1]);
        assert!(matches!(
            family_index(1, 0),
            Err(Error::InadmissibleIndex { m: 1 })
        ));
    }

    #[test]
    fn weight_and_depth() {
        let idx = family_index(3, 2).unwrap();
        assert_eq!(idx.weight(), 5);
        assert_eq!(idx.depth(), 3);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_family(2, 1).unwrap().parts(), &[3]);
        assert_eq!(dual_family(3, 1).unwrap().parts(), &[3, 1]);
        assert_eq!(dual_family(2, 2).unwrap().parts(), &[4]);
    }

    #[test]
    fn dual_preserves_weight_and_is_involutive() {
        for n in 0..=20u32 {
            for k in 0..=n {
                let m = n - k + 2;
                assert_eq!(family_index(m, k).unwrap().weight(), n + 2);
                let dual = dual_family(m, k).unwrap();
                assert_eq!(dual.weight(), n + 2);
                // dual of the dual: (k+2, {1}_{m-2}) maps back to (m, {1}_k)
                let back = dual_family(k + 2, m - 2).unwrap();
                assert_eq!(back, family_index(m, k).unwrap());
            }
        }
    }

    #[test]
    fn triangle_combination_shape() {
        let c0 = triangle_combination(0);
        assert_eq!(c0.terms().len(), 1);
        assert_eq!(c0.terms()[0].0, rat_int(1));
        assert_eq!(c0.terms()[0].1.parts(), &[2]);

        let c1 = triangle_combination(1);
        assert_eq!(c1.terms().len(), 2);
        assert_eq!(c1.terms()[0].1.parts(), &[3]);
        assert_eq!(c1.terms()[1].1.parts(), &[2, 1]);

        let c2 = triangle_combination(2);
        assert_eq!(c2.to_string(), "2*zeta(4) + 2*zeta(3,1) + 2*zeta(2,1,1)");

        for n in 0..=20u32 {
            let c = triangle_combination(n);
            assert_eq!(c.terms().len(), n as usize + 1);
            let nf = Rational::from_integer(crate::exact::factorial(n));
            for (coeff, idx) in c.terms() {
                assert_eq!(coeff, &nf);
                assert_eq!(idx.weight(), n + 2);
            }
        }
    }

    #[test]
    fn index_display() {
        assert_eq!(family_index(3, 1).unwrap().to_string(), "zeta(3,1)");
        assert_eq!(family_index(2, 0).unwrap().to_string(), "zeta(2)");
    }
}
