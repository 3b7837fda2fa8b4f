//! Finite abelian groups given by cyclic factors, canonicalized to their
//! primary decomposition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{factor, FactoredInteger};

/// Orders `m_i` of the cyclic factors `Z/m_i`, in the order they were written.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclicFactorList(Vec<BigUint>);

impl CyclicFactorList {
    pub fn new(factors: Vec<BigUint>) -> Result<Self> {
        if let Some(position) = factors.iter().position(Zero::is_zero) {
            return Err(Error::ZeroFactor { position });
        }
        Ok(CyclicFactorList(factors))
    }

    pub fn factors(&self) -> &[BigUint] {
        &self.0
    }

    /// Product of the factors.
    pub fn order(&self) -> BigUint {
        self.0.iter().product()
    }
}

impl<T: Into<BigUint>> FromIterator<T> for CyclicFactorList {
    /// Panics on a zero factor; use [`CyclicFactorList::new`] for fallible input.
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        CyclicFactorList::new(iter.into_iter().map(Into::into).collect())
            .expect("cyclic factors are positive")
    }
}

impl FromStr for CyclicFactorList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

impl fmt::Display for CyclicFactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("C1");
        }
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("xC")?;
            } else {
                f.write_str("C")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    /// A nonzero decimal integer.
    fn number(&mut self) -> Result<BigUint> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a positive integer");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let n: BigUint = digits.parse().expect("decimal digits");
        if n.is_zero() {
            return Err(Error::ZeroFactor { position: start });
        }
        Ok(n)
    }
}

/// Parses a group description.
///
/// Two spellings are accepted: comma-separated orders (`"9,5"`, `"2, 4, 3"`)
/// and C-notation joined by `x` (`"C9xC5"`, `"c9 x c5"`).
pub fn parse_group_spec(text: &str) -> Result<CyclicFactorList> {
    let mut sc = Scanner {
        bytes: text.as_bytes(),
        pos: 0,
    };
    sc.skip_ws();
    let c_notation = match sc.peek() {
        None => return sc.error("empty group specification"),
        Some(b'c' | b'C') => true,
        Some(b) if b.is_ascii_digit() => false,
        Some(_) => return sc.error("expected a cyclic factor"),
    };
    let separator = if c_notation { b'x' } else { b',' };
    let mut factors = Vec::new();
    loop {
        sc.skip_ws();
        if c_notation {
            match sc.peek() {
                Some(b'c' | b'C') => sc.pos += 1,
                _ => return sc.error("expected 'C'"),
            }
            sc.skip_ws();
        }
        factors.push(sc.number()?);
        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some(b) if b.to_ascii_lowercase() == separator => sc.pos += 1,
            Some(_) => {
                let expected = if c_notation { "'x'" } else { "','" };
                return sc.error(format!("expected {expected} or end of input"));
            }
        }
    }
    Ok(CyclicFactorList(factors))
}

/// A finite abelian group as a direct sum of its Sylow subgroups, each given
/// by the ascending exponents `a(r, 1) <= ... <= a(r, n_r)` of its cyclic
/// factors `Z/r^a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimaryDecomposition {
    components: BTreeMap<u128, Vec<u32>>,
    order: FactoredInteger,
    exponent: FactoredInteger,
}

impl PrimaryDecomposition {
    pub fn trivial() -> Self {
        PrimaryDecomposition {
            components: BTreeMap::new(),
            order: FactoredInteger::one(),
            exponent: FactoredInteger::one(),
        }
    }

    /// Builds from per-prime exponent lists in any order. Zero exponents are
    /// dropped; every key must be prime.
    pub fn from_components<I>(components: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u128, Vec<u32>)>,
    {
        let mut merged: BTreeMap<u128, Vec<u32>> = BTreeMap::new();
        for (r, exps) in components {
            merged
                .entry(r)
                .or_default()
                .extend(exps.into_iter().filter(|&a| a > 0));
        }
        merged.retain(|_, exps| !exps.is_empty());
        // Validates the primes.
        let order = FactoredInteger::from_factors(
            merged
                .iter()
                .map(|(&r, exps)| (r, exps.iter().sum::<u32>())),
        )?;
        for exps in merged.values_mut() {
            exps.sort_unstable();
        }
        let exponent = FactoredInteger::from_sorted(
            merged
                .iter()
                .map(|(&r, exps)| (r, *exps.last().expect("nonempty")))
                .collect(),
        );
        Ok(PrimaryDecomposition {
            components: merged,
            order,
            exponent,
        })
    }

    /// Per-prime ascending exponent lists.
    pub fn components(&self) -> &BTreeMap<u128, Vec<u32>> {
        &self.components
    }

    /// Exponents of the Sylow `r`-subgroup (empty if `r` does not divide `|G|`).
    pub fn sylow_exponents(&self, r: u128) -> &[u32] {
        self.components.get(&r).map_or(&[], Vec::as_slice)
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.components.keys().copied()
    }

    pub fn order(&self) -> &FactoredInteger {
        &self.order
    }

    pub fn exponent(&self) -> &FactoredInteger {
        &self.exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.components.values().all(|exps| exps.len() <= 1)
    }

    /// The prime-power cyclic factors `(r, a)`, primes ascending and exponents
    /// ascending within a prime.
    pub fn prime_power_factors(&self) -> impl Iterator<Item = (u128, u32)> + '_ {
        self.components
            .iter()
            .flat_map(|(&r, exps)| exps.iter().map(move |&a| (r, a)))
    }
}

impl fmt::Display for PrimaryDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("C1");
        }
        for (i, (r, a)) in self.prime_power_factors().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "C{}", BigUint::from(r).pow(a))?;
        }
        Ok(())
    }
}

/// Splits every `Z/m` into its prime-power parts and groups them by prime.
pub fn primary_decomposition(factors: &CyclicFactorList) -> Result<PrimaryDecomposition> {
    let mut components: BTreeMap<u128, Vec<u32>> = BTreeMap::new();
    for m in factors.factors() {
        if m.is_one() {
            continue;
        }
        for &(r, a) in factor(m)?.factors() {
            components.entry(r).or_default().push(a);
        }
    }
    PrimaryDecomposition::from_components(components)
}

impl TryFrom<&CyclicFactorList> for PrimaryDecomposition {
    type Error = Error;

    fn try_from(list: &CyclicFactorList) -> Result<Self> {
        primary_decomposition(list)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(xs: &[u64]) -> CyclicFactorList {
        xs.iter().copied().collect()
    }

    fn decompose(xs: &[u64]) -> PrimaryDecomposition {
        primary_decomposition(&list(xs)).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_group_spec("C9xC5").unwrap(), list(&[9, 5]));
        assert_eq!(parse_group_spec("2, 4, 3").unwrap(), list(&[2, 4, 3]));
        assert_eq!(parse_group_spec("C1").unwrap(), list(&[1]));
        assert_eq!(parse_group_spec("  c9 X c5 ").unwrap(), list(&[9, 5]));
        assert_eq!(parse_group_spec("45").unwrap(), list(&[45]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_group_spec(""),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_group_spec("C9xD5"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_group_spec("9,,5"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_group_spec("9;5"),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(matches!(
            parse_group_spec("C9x"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert_eq!(
            parse_group_spec("3, 0"),
            Err(Error::ZeroFactor { position: 3 })
        );
        assert_eq!(
            CyclicFactorList::new(vec![BigUint::from(2u32), BigUint::zero()]),
            Err(Error::ZeroFactor { position: 1 })
        );
    }

    #[test]
    fn decomposition_examples() {
        let g = decompose(&[45]);
        assert_eq!(
            g.components(),
            &BTreeMap::from([(3, vec![2]), (5, vec![1])])
        );
        assert_eq!(g.order().value(), &BigUint::from(45u32));
        assert_eq!(g.exponent().value(), &BigUint::from(45u32));

        let g = decompose(&[6]);
        assert_eq!(
            g.components(),
            &BTreeMap::from([(2, vec![1]), (3, vec![1])])
        );
        assert_eq!(g.exponent().value(), &BigUint::from(6u32));

        let g = decompose(&[2, 4, 3]);
        assert_eq!(
            g.components(),
            &BTreeMap::from([(2, vec![1, 2]), (3, vec![1])])
        );
        assert_eq!(g.order().value(), &BigUint::from(24u32));
        assert_eq!(g.exponent().value(), &BigUint::from(12u32));
        assert!(!g.is_cyclic());
        assert_eq!(g.to_string(), "C2 x C4 x C3");
    }

    #[test]
    fn trivial_group() {
        for g in [
            decompose(&[]),
            decompose(&[1, 1]),
            PrimaryDecomposition::trivial(),
        ] {
            assert!(g.is_trivial());
            assert!(g.order().is_one());
            assert!(g.exponent().is_one());
            assert_eq!(g.to_string(), "C1");
        }
    }

    #[test]
    fn order_and_exponent_of_two_group() {
        let g = PrimaryDecomposition::from_components([(2, vec![2, 1])]).unwrap();
        assert_eq!(g.sylow_exponents(2), &[1, 2]);
        assert_eq!(g.exponent().value(), &BigUint::from(4u32));
        assert_eq!(g.order().value(), &BigUint::from(8u32));
        assert!(PrimaryDecomposition::from_components([(6, vec![1])]).is_err());
    }

    #[test]
    fn display_round_trips_through_parser() {
        let l = list(&[9, 5, 1]);
        assert_eq!(l.to_string(), "C9xC5xC1");
        assert_eq!(parse_group_spec(&l.to_string()).unwrap(), l);
    }
}
