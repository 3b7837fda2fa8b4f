//! Closed-form counts of irreducible representations.
//!
//! Irreducible complex characters of `G` are grouped by character field
//! `Q(zeta_d)`; the class `I_d(G)` is counted prime by prime from the
//! primary decomposition. Over `F_q` the characters in `I_d(G)` fall into
//! Frobenius orbits of length `ord(q mod d)`, each of which is one
//! irreducible representation of that degree.
//!
//! Since `Q(zeta_d) = Q(zeta_2d)` for odd `d`, when the exponent is even
//! only even `d` label classes, and the class at `2-part = 2` includes the
//! characters whose 2-part is trivial.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::PrimaryDecomposition;
use crate::numtheory::{FactoredInteger, OrderContext};
use crate::table::DegreeTable;

/// Per-divisor bookkeeping behind a degree table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorContribution {
    pub d: BigUint,
    /// `|I_d(G)|`.
    pub card_id: BigUint,
    /// `ord(q mod d)`.
    pub degree: BigUint,
    /// `card_id / degree` irreducibles of that degree.
    pub count: BigUint,
}

/// `|F(G_r, l)| = prod_j r^min(l, a_j)`, the order of the largest quotient
/// of the Sylow subgroup with exponent dividing `r^l`.
pub fn factor_quotient_order(r: u128, exps: &[u32], l: u32) -> BigUint {
    let total: u32 = exps.iter().map(|&a| a.min(l)).sum();
    BigUint::from(r).pow(total)
}

/// `|I_{r^l}(G_r)|` for a Sylow subgroup with exponents `exps`.
///
/// Level 0 is the trivial character alone. For `r = 2, l = 1` the class also
/// absorbs the trivial character, giving `2^n_2`.
pub fn card_i_prime_power(r: u128, exps: &[u32], l: u32) -> Result<BigUint> {
    if l == 0 {
        return Ok(BigUint::one());
    }
    let max = exps.iter().copied().max().unwrap_or(0);
    if l > max {
        return Err(Error::OutOfRange { level: l, max });
    }
    if r == 2 && l == 1 {
        return Ok(BigUint::one() << exps.len());
    }
    Ok(factor_quotient_order(r, exps, l) - factor_quotient_order(r, exps, l - 1))
}

/// Divisors of the exponent that label character classes: all divisors when
/// `e` is odd, the even ones when `e` is even. Ascending.
pub fn relevant_divisors(e: &FactoredInteger) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = relevant_exponent_vectors(e)
        .into_iter()
        .map(|v| FactoredInteger::from_sorted(v).value().clone())
        .collect();
    out.sort();
    out
}

/// Relevant divisors as factorizations, in mixed-radix order.
fn relevant_exponent_vectors(e: &FactoredInteger) -> Vec<Vec<(u128, u32)>> {
    let mut out: Vec<Vec<(u128, u32)>> = vec![Vec::new()];
    for &(r, a) in e.factors() {
        let lo = u32::from(r == 2);
        let mut next = Vec::with_capacity(out.len() * (a - lo + 1) as usize);
        for v in &out {
            for l in lo..=a {
                let mut w = v.clone();
                if l > 0 {
                    w.push((r, l));
                }
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Whether `d` labels a character class of `g`: `d | e`, and `d` is even
/// whenever `e` is.
fn relevant_factorization(g: &PrimaryDecomposition, d: &BigUint) -> Result<FactoredInteger> {
    let e = g.exponent();
    let not_relevant = || Error::NotARelevantDivisor {
        d: d.clone(),
        exponent: e.value().clone(),
    };
    if d.is_zero() || !(e.value() % d).is_zero() {
        return Err(not_relevant());
    }
    let mut rest = d.clone();
    let mut pairs = Vec::new();
    for r in e.primes() {
        let rb = BigUint::from(r);
        let mut l = 0;
        while (&rest % &rb).is_zero() {
            rest /= &rb;
            l += 1;
        }
        if l > 0 {
            pairs.push((r, l));
        }
    }
    debug_assert!(rest.is_one());
    let fd = FactoredInteger::from_sorted(pairs);
    if e.is_even() && !fd.is_even() {
        return Err(not_relevant());
    }
    Ok(fd)
}

fn card_from_factorization(g: &PrimaryDecomposition, fd: &FactoredInteger) -> Result<BigUint> {
    g.components()
        .iter()
        .map(|(&r, exps)| card_i_prime_power(r, exps, fd.valuation(r)))
        .product()
}

/// `|I_d(G)| = prod_r |I_{d_r}(G_r)|` for a relevant divisor `d`.
pub fn card_i_d(g: &PrimaryDecomposition, d: &BigUint) -> Result<BigUint> {
    let fd = relevant_factorization(g, d)?;
    card_from_factorization(g, &fd)
}

/// Fails unless the characteristic of `q` is prime to `|G|`.
pub fn check_coprime(g: &PrimaryDecomposition, q: &FieldSpec) -> Result<()> {
    let p = q.characteristic();
    if g.order().valuation(p) > 0 {
        return Err(Error::NotCoprime {
            a: q.order().clone(),
            b: g.order().value().clone(),
            common: BigUint::from(p),
        });
    }
    Ok(())
}

/// One [`DivisorContribution`] per relevant divisor, ascending in `d`.
pub fn divisor_contributions(
    g: &PrimaryDecomposition,
    q: &FieldSpec,
) -> Result<Vec<DivisorContribution>> {
    check_coprime(g, q)?;
    let mut orders = OrderContext::new(q.order().clone());
    orders.prepare(g.primes())?;
    let mut out = Vec::new();
    for v in relevant_exponent_vectors(g.exponent()) {
        let fd = FactoredInteger::from_sorted(v);
        let card_id = card_from_factorization(g, &fd)?;
        let degree = orders.order(&fd)?;
        let (count, rem) = card_id.div_rem(&degree);
        if !rem.is_zero() {
            return Err(Error::Invariant(format!(
                "|I_{}| = {card_id} is not divisible by ord(q mod d) = {degree}",
                fd.value()
            )));
        }
        out.push(DivisorContribution {
            d: fd.value().clone(),
            card_id,
            degree,
            count,
        });
    }
    out.sort_by(|a, b| a.d.cmp(&b.d));
    Ok(out)
}

/// Sums the per-divisor counts by degree.
pub fn aggregate(
    g: &PrimaryDecomposition,
    q: &FieldSpec,
    contributions: &[DivisorContribution],
) -> Result<DegreeTable> {
    let mut counts: BTreeMap<BigUint, BigUint> = BTreeMap::new();
    for c in contributions {
        *counts.entry(c.degree.clone()).or_default() += &c.count;
    }
    DegreeTable::from_counts(counts, g.order().value().clone(), q.order().clone())
}

/// Degree table together with the per-divisor contributions it came from.
pub fn degree_table_with_divisors(
    g: &PrimaryDecomposition,
    q: &FieldSpec,
) -> Result<(DegreeTable, Vec<DivisorContribution>)> {
    let contributions = divisor_contributions(g, q)?;
    let table = aggregate(g, q, &contributions)?;
    Ok((table, contributions))
}

/// Degrees and multiplicities of the irreducible representations of `g`
/// over `F_q`.
pub fn degree_table(g: &PrimaryDecomposition, q: &FieldSpec) -> Result<DegreeTable> {
    degree_table_with_divisors(g, q).map(|(table, _)| table)
}

/// Multiplicities `a_d` in `F_q G = sum_d a_d F_q(zeta_d)`, one pair per
/// relevant divisor.
pub fn wedderburn_decomposition(
    g: &PrimaryDecomposition,
    q: &FieldSpec,
) -> Result<Vec<(BigUint, BigUint)>> {
    Ok(divisor_contributions(g, q)?
        .into_iter()
        .map(|c| (c.d, c.count))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::primary_decomposition;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn group(xs: &[u64]) -> PrimaryDecomposition {
        primary_decomposition(&xs.iter().copied().collect()).unwrap()
    }

    fn pairs(t: &DegreeTable) -> Vec<(u64, u64)> {
        t.pairs()
            .map(|(n, k)| (n.try_into().unwrap(), k.try_into().unwrap()))
            .collect()
    }

    #[test]
    fn quotient_orders() {
        assert_eq!(factor_quotient_order(3, &[2], 1), big(3));
        assert_eq!(factor_quotient_order(2, &[1, 2], 1), big(4));
        assert_eq!(factor_quotient_order(5, &[1], 0), big(1));
        assert_eq!(factor_quotient_order(2, &[1, 2], 5), big(8));
    }

    #[test]
    fn prime_power_cardinalities() {
        assert_eq!(card_i_prime_power(3, &[2], 1).unwrap(), big(2));
        assert_eq!(card_i_prime_power(2, &[1, 2], 1).unwrap(), big(4));
        assert_eq!(card_i_prime_power(7, &[1, 3], 0).unwrap(), big(1));
        assert_eq!(card_i_prime_power(3, &[2], 2).unwrap(), big(6));
        assert_eq!(card_i_prime_power(2, &[1, 2], 2).unwrap(), big(4));
        assert_eq!(
            card_i_prime_power(3, &[2], 3),
            Err(Error::OutOfRange { level: 3, max: 2 })
        );
        assert_eq!(card_i_prime_power(5, &[], 0).unwrap(), big(1));
    }

    #[test]
    fn class_cardinalities() {
        let c45 = group(&[45]);
        assert_eq!(card_i_d(&c45, &big(15)).unwrap(), big(8));
        assert_eq!(card_i_d(&c45, &big(1)).unwrap(), big(1));
        assert_eq!(card_i_d(&c45, &big(45)).unwrap(), big(24));
        assert!(matches!(
            card_i_d(&c45, &big(7)),
            Err(Error::NotARelevantDivisor { .. })
        ));
        let c4 = group(&[4]);
        assert!(matches!(
            card_i_d(&c4, &big(1)),
            Err(Error::NotARelevantDivisor { .. })
        ));
        assert_eq!(card_i_d(&c4, &big(2)).unwrap(), big(2));
        assert_eq!(card_i_d(&c4, &big(4)).unwrap(), big(2));
    }

    #[test]
    fn relevant_divisor_examples() {
        let e = |n: u64| crate::numtheory::factor(&big(n)).unwrap();
        assert_eq!(
            relevant_divisors(&e(45)),
            [1, 3, 5, 9, 15, 45].map(big).to_vec()
        );
        assert_eq!(relevant_divisors(&e(4)), [2, 4].map(big).to_vec());
        assert_eq!(relevant_divisors(&e(1)), vec![big(1)]);
        assert_eq!(relevant_divisors(&e(12)), [2, 4, 6, 12].map(big).to_vec());
    }

    #[test]
    fn degree_table_examples() {
        let g = group(&[9, 5]);
        let t = degree_table(&g, &FieldSpec::new(2, 1).unwrap()).unwrap();
        assert_eq!(pairs(&t), vec![(1, 1), (2, 1), (4, 3), (6, 1), (12, 2)]);
        let t = degree_table(&g, &FieldSpec::new(2, 6).unwrap()).unwrap();
        assert_eq!(pairs(&t), vec![(1, 9), (2, 18)]);

        let t = degree_table(
            &PrimaryDecomposition::trivial(),
            &FieldSpec::new(5, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(pairs(&t), vec![(1, 1)]);

        let t = degree_table(&group(&[3, 3]), &FieldSpec::new(2, 1).unwrap()).unwrap();
        assert_eq!(pairs(&t), vec![(1, 1), (2, 4)]);
    }

    #[test]
    fn degree_table_rejects_shared_characteristic() {
        let err = degree_table(&group(&[3]), &FieldSpec::new(3, 1).unwrap()).unwrap_err();
        assert_eq!(
            err,
            Error::NotCoprime {
                a: big(3),
                b: big(3),
                common: big(3)
            }
        );
    }

    #[test]
    fn wedderburn_examples() {
        let w = |xs: &[u64], p, m| -> Vec<(u64, u64)> {
            wedderburn_decomposition(&group(xs), &FieldSpec::new(p, m).unwrap())
                .unwrap()
                .into_iter()
                .map(|(d, a)| (d.try_into().unwrap(), a.try_into().unwrap()))
                .collect()
        };
        assert_eq!(
            w(&[45], 2, 1),
            vec![(1, 1), (3, 1), (5, 1), (9, 1), (15, 2), (45, 2)]
        );
        assert_eq!(w(&[], 7, 1), vec![(1, 1)]);
        assert_eq!(w(&[4], 3, 1), vec![(2, 2), (4, 1)]);
    }

    #[test]
    fn contributions_are_auditable() {
        let g = group(&[9, 5]);
        let (table, contributions) =
            degree_table_with_divisors(&g, &FieldSpec::new(2, 1).unwrap()).unwrap();
        let total: BigUint = contributions.iter().map(|c| &c.card_id).sum();
        assert_eq!(&total, table.group_order());
        let last = contributions.last().unwrap();
        assert_eq!(
            (
                last.d.clone(),
                last.card_id.clone(),
                last.degree.clone(),
                last.count.clone()
            ),
            (big(45), big(24), big(12), big(2))
        );
    }
}
