//! The ambient abelian group: the integers or a cyclic group `Z/nZ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};

/// Which abelian group the elements of a set live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AmbientGroup {
    Integers,
    /// Residues modulo `n`, `n >= 2`.
    CyclicMod(i64),
}

/// A canonical group element.
///
/// Integers are stored exactly. Residues are always reduced into `0..n`, so
/// two elements of the same group are equal iff their values are equal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(i64);

impl Element {
    pub fn value(self) -> i64 {
        self.0
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl AmbientGroup {
    pub fn cyclic(modulus: i64) -> Result<Self> {
        if modulus < 2 {
            return Err(usage(format!("modulus must be at least 2, got {modulus}")));
        }
        Ok(AmbientGroup::CyclicMod(modulus))
    }

    pub fn modulus(self) -> Option<i64> {
        match self {
            AmbientGroup::Integers => None,
            AmbientGroup::CyclicMod(n) => Some(n),
        }
    }

    /// Canonical element for an integer value (reduced mod `n` in `Z/nZ`).
    pub fn element(self, value: i64) -> Element {
        match self {
            AmbientGroup::Integers => Element(value),
            AmbientGroup::CyclicMod(n) => Element(value.rem_euclid(n)),
        }
    }

    pub fn zero(self) -> Element {
        Element(0)
    }

    pub fn is_canonical(self, e: Element) -> bool {
        match self {
            AmbientGroup::Integers => true,
            AmbientGroup::CyclicMod(n) => (0..n).contains(&e.0),
        }
    }

    pub fn add(self, a: Element, b: Element) -> Result<Element> {
        match self {
            AmbientGroup::Integers => {
                a.0.checked_add(b.0)
                    .map(Element)
                    .ok_or(Error::Overflow("group addition"))
            }
            AmbientGroup::CyclicMod(n) => {
                let s = (a.0 as i128 + b.0 as i128).rem_euclid(n as i128);
                Ok(Element(s as i64))
            }
        }
    }

    pub fn neg(self, a: Element) -> Result<Element> {
        match self {
            AmbientGroup::Integers => {
                a.0.checked_neg()
                    .map(Element)
                    .ok_or(Error::Overflow("group negation"))
            }
            AmbientGroup::CyclicMod(n) => {
                Ok(Element((-(a.0 as i128)).rem_euclid(n as i128) as i64))
            }
        }
    }

    pub fn sub(self, a: Element, b: Element) -> Result<Element> {
        self.add(a, self.neg(b)?)
    }

    /// `times * a`, computed with the same overflow discipline as `add`.
    pub fn scale(self, times: u64, a: Element) -> Result<Element> {
        match self {
            AmbientGroup::Integers => i64::try_from(times)
                .ok()
                .and_then(|t| t.checked_mul(a.0))
                .map(Element)
                .ok_or(Error::Overflow("group scaling")),
            AmbientGroup::CyclicMod(n) => {
                let s = (times as i128 * a.0 as i128).rem_euclid(n as i128);
                Ok(Element(s as i64))
            }
        }
    }

    /// Sum of a list of elements; the empty sum is zero.
    pub fn sum<'a, I>(self, elems: I) -> Result<Element>
    where
        I: IntoIterator<Item = &'a Element>,
    {
        elems
            .into_iter()
            .try_fold(self.zero(), |acc, &e| self.add(acc, e))
    }
}

impl fmt::Display for AmbientGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbientGroup::Integers => write!(f, "Z"),
            AmbientGroup::CyclicMod(n) => write!(f, "Z/{n}Z"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Z: AmbientGroup = AmbientGroup::Integers;

    fn ints(g: AmbientGroup, v: &[i64]) -> Vec<Element> {
        v.iter().map(|&x| g.element(x)).collect()
    }

    #[test]
    fn add_examples() {
        assert_eq!(Z.add(Z.element(19), Z.element(20)).unwrap().value(), 39);
        assert_eq!(Z.add(Z.element(1), Z.element(38)).unwrap().value(), 39);
        let c7 = AmbientGroup::cyclic(7).unwrap();
        assert_eq!(c7.add(c7.element(5), c7.element(4)).unwrap().value(), 2);
    }

    #[test]
    fn sum_examples() {
        assert_eq!(Z.sum(&[]).unwrap().value(), 0);
        assert_eq!(Z.sum(&ints(Z, &[1, 3, 6])).unwrap().value(), 10);
        let c38 = AmbientGroup::cyclic(38).unwrap();
        assert_eq!(c38.sum(&ints(c38, &[2, 19, 19])).unwrap().value(), 2);
    }

    #[test]
    fn overflow_is_an_error() {
        let big = Z.element(i64::MAX);
        assert_eq!(
            Z.add(big, Z.element(1)),
            Err(Error::Overflow("group addition"))
        );
        assert!(Z.neg(Z.element(i64::MIN)).is_err());
        assert!(Z.scale(3, Z.element(i64::MAX / 2)).is_err());
    }

    #[test]
    fn cyclic_rejects_small_modulus() {
        assert!(AmbientGroup::cyclic(1).is_err());
        assert!(AmbientGroup::cyclic(0).is_err());
        assert!(AmbientGroup::cyclic(2).is_ok());
    }

    #[test]
    fn residues_are_canonical() {
        let c = AmbientGroup::cyclic(5).unwrap();
        assert_eq!(c.element(-1).value(), 4);
        assert_eq!(c.element(12).value(), 2);
        assert_eq!(c.neg(c.element(2)).unwrap().value(), 3);
        let large = AmbientGroup::cyclic(i64::MAX).unwrap();
        let e = large.element(i64::MAX - 1);
        assert_eq!(large.add(e, e).unwrap().value(), i64::MAX - 2);
    }

    proptest! {
        #[test]
        fn sum_is_permutation_invariant(
            mut v in proptest::collection::vec(-1000i64..1000, 0..8),
            modulus in 2i64..100,
            rot in 0usize..8,
        ) {
            for g in [Z, AmbientGroup::CyclicMod(modulus)] {
                let elems = ints(g, &v);
                let s = g.sum(&elems).unwrap();
                prop_assert!(g.is_canonical(s));
                let mut rev = elems.clone();
                rev.reverse();
                prop_assert_eq!(g.sum(&rev).unwrap(), s);
                if !v.is_empty() {
                    let r = rot % v.len();
                    v.rotate_left(r);
                    prop_assert_eq!(g.sum(&ints(g, &v)).unwrap(), s);
                }
            }
        }
    }
}
