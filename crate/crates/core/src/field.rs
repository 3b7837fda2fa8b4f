//! The finite field `F_q`, identified by its characteristic and degree.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, FACTOR_LIMIT_BITS};

/// `q = p^m` with `p` prime and `m >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u128,
    m: u32,
    value: BigUint,
}

impl FieldSpec {
    pub fn new(p: u128, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Input("field degree m must be at least 1".into()));
        }
        if p >> FACTOR_LIMIT_BITS != 0 {
            return Err(Error::FactorizationLimitExceeded {
                value: BigUint::from(p),
                bits: FACTOR_LIMIT_BITS,
            });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(BigUint::from(p)));
        }
        Ok(FieldSpec {
            p,
            m,
            value: BigUint::from(p).pow(m),
        })
    }

    /// Splits `q` into `p^m`, rejecting anything that is not a prime power.
    pub fn from_order(q: &BigUint) -> Result<Self> {
        if *q <= BigUint::one() {
            return Err(Error::NotAPrimePower(q.clone()));
        }
        // An exact root too large to certify leaves the answer undecided.
        let mut undecided = false;
        let max_k = (q.bits() as u32).max(1);
        for k in 1..=max_k {
            let root = q.nth_root(k);
            if root.pow(k) != *q {
                continue;
            }
            match root.to_u128().filter(|r| r >> FACTOR_LIMIT_BITS == 0) {
                Some(p) if is_prime(p) => return Self::new(p, k),
                Some(_) => {}
                None => undecided = true,
            }
        }
        if undecided {
            return Err(Error::FactorizationLimitExceeded {
                value: q.clone(),
                bits: FACTOR_LIMIT_BITS,
            });
        }
        Err(Error::NotAPrimePower(q.clone()))
    }

    pub fn characteristic(&self) -> u128 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// The field order `q`.
    pub fn order(&self) -> &BigUint {
        &self.value
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{} ({}^{})", self.value, self.p, self.m)
    }
}
