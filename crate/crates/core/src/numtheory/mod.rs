//! Integer arithmetic: factorization, divisors, gcd/lcm, modular powers and
//! multiplicative orders.

mod prime;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use prime::{factor_u128, is_prime, TRIAL_LIMIT};

/// Inputs to [`factor`] must not exceed `2^FACTOR_LIMIT_BITS`.
pub const FACTOR_LIMIT_BITS: u32 = 96;

/// A positive integer together with its prime factorization.
///
/// Primes are ascending and distinct; the empty factor list is the value 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    value: BigUint,
    factors: Vec<(u128, u32)>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger {
            value: BigUint::one(),
            factors: Vec::new(),
        }
    }

    /// Builds from `(prime, exponent)` pairs in any order. Repeated primes are
    /// merged, zero exponents dropped, and every prime is checked.
    pub fn from_factors<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u128, u32)>,
    {
        let mut merged: BTreeMap<u128, u32> = BTreeMap::new();
        for (p, e) in pairs {
            if e == 0 {
                continue;
            }
            if !is_prime(p) {
                return Err(Error::NotPrime(BigUint::from(p)));
            }
            *merged.entry(p).or_insert(0) += e;
        }
        Ok(Self::from_sorted(merged.into_iter().collect()))
    }

    /// Primes must already be verified, distinct and ascending.
    pub(crate) fn from_sorted(factors: Vec<(u128, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        let value = factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e));
        FactoredInteger { value, factors }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factorization (0 if absent).
    pub fn valuation(&self, p: u128) -> u32 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.valuation(2) > 0
    }

    /// Number of divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(_, e)| acc * (e + 1))
    }

    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut merged: BTreeMap<u128, u32> = self.factors.iter().copied().collect();
        for &(p, e) in &other.factors {
            *merged.entry(p).or_insert(0) += e;
        }
        FactoredInteger {
            value: &self.value * &other.value,
            factors: merged.into_iter().collect(),
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &FactoredInteger) -> bool {
        self.factors.iter().all(|&(p, e)| other.valuation(p) >= e)
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Factors `n >= 1`. Fails for `n = 0` and above `2^96`.
pub fn factor(n: &BigUint) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if n.bits() > u64::from(FACTOR_LIMIT_BITS) && *n != BigUint::one() << FACTOR_LIMIT_BITS {
        return Err(Error::FactorizationLimitExceeded {
            value: n.clone(),
            bits: FACTOR_LIMIT_BITS,
        });
    }
    let small = n.to_u128().expect("bounded by 2^96");
    Ok(FactoredInteger {
        value: n.clone(),
        factors: factor_u128(small),
    })
}

/// Every divisor of `n`, strictly ascending.
pub fn divisors(n: &FactoredInteger) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for &(p, e) in n.factors() {
        let p = BigUint::from(p);
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}

pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

pub fn lcm(a: &BigUint, b: &BigUint) -> Result<BigUint> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(a.lcm(b))
}

pub fn pow_mod(base: &BigUint, exp: &BigUint, modulus: &BigUint) -> Result<BigUint> {
    if modulus.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(base.modpow(exp, modulus))
}

/// Euler's totient in factored form: `prod r^(a-1) (r-1)`.
pub fn totient(d: &FactoredInteger) -> Result<FactoredInteger> {
    OrderContext::new(BigUint::one()).totient(d)
}

/// The `prod r^(a-1)` part of the totient.
fn totient_prime_part(d: &FactoredInteger) -> FactoredInteger {
    FactoredInteger::from_sorted(
        d.factors()
            .iter()
            .filter(|&&(_, a)| a > 1)
            .map(|&(r, a)| (r, a - 1))
            .collect(),
    )
}

/// Multiplicative order of `q` modulo `d`: the least `n >= 1` with `d | q^n - 1`.
pub fn mul_order(q: &BigUint, d: &BigUint) -> Result<BigUint> {
    let fd = factor(d)?;
    OrderContext::new(q.clone()).order(&fd)
}

/// Order computations for a fixed base `q` that reuse the factorizations of
/// `r - 1` across many moduli.
#[derive(Clone, Debug)]
pub struct OrderContext {
    q: BigUint,
    shifted: BTreeMap<u128, FactoredInteger>,
}

impl OrderContext {
    pub fn new(q: BigUint) -> Self {
        OrderContext {
            q,
            shifted: BTreeMap::new(),
        }
    }

    pub fn base(&self) -> &BigUint {
        &self.q
    }

    /// Factors `r - 1` for every prime `r` ahead of time.
    pub fn prepare(&mut self, primes: impl IntoIterator<Item = u128>) -> Result<()> {
        for r in primes {
            if let std::collections::btree_map::Entry::Vacant(e) = self.shifted.entry(r) {
                let f = factor(&BigUint::from(r - 1))?;
                e.insert(f);
            }
        }
        Ok(())
    }

    fn totient(&mut self, d: &FactoredInteger) -> Result<FactoredInteger> {
        self.prepare(d.primes())?;
        let mut phi = totient_prime_part(d);
        for r in d.primes() {
            phi = phi.mul(&self.shifted[&r]);
        }
        Ok(phi)
    }

    /// `ord(q mod d)`. Starts from `phi(d)` and divides out each prime while
    /// the power still reduces to 1.
    pub fn order(&mut self, d: &FactoredInteger) -> Result<BigUint> {
        if d.is_one() {
            return Ok(BigUint::one());
        }
        let modulus = d.value();
        let base = &self.q % modulus;
        let common = base.gcd(modulus);
        if !common.is_one() {
            return Err(Error::NotCoprime {
                a: self.q.clone(),
                b: modulus.clone(),
                common,
            });
        }
        let phi = self.totient(d)?;
        let mut n = phi.value().clone();
        for &(s, k) in phi.factors() {
            let s = BigUint::from(s);
            for _ in 0..k {
                let candidate = &n / &s;
                if base.modpow(&candidate, modulus).is_one() {
                    n = candidate;
                } else {
                    break;
                }
            }
        }
        Ok(n)
    }
}
