//! Brute-force cross-check of the closed-form counts.
//!
//! A character of `G = sum_j Z/m_j` is a residue vector `(c_j mod m_j)`, and
//! `chi -> chi^q` multiplies every residue by `q`. Walking the orbits of that
//! map over all `|G|` characters gives the degree table directly. Nothing
//! here calls the closed-form engine; [`mul_order`] is used only for the
//! optional per-orbit consistency check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::PrimaryDecomposition;
use crate::numtheory::mul_order;
use crate::table::DegreeTable;

pub const DEFAULT_ORACLE_BOUND: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Largest group order the oracle will enumerate.
    pub bound: u64,
    /// Check every orbit against `ord(q mod order(chi))` and the order
    /// against each member.
    pub check_orbits: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            bound: DEFAULT_ORACLE_BOUND,
            check_orbits: true,
        }
    }
}

/// A character as residues `c_j mod m_j`, one per prime-power cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterVector {
    residues: Vec<u64>,
    moduli: Vec<u64>,
}

impl CharacterVector {
    pub fn new(residues: Vec<u64>, moduli: Vec<u64>) -> Result<Self> {
        if residues.len() != moduli.len() {
            return Err(Error::Input(format!(
                "{} residues for {} moduli",
                residues.len(),
                moduli.len()
            )));
        }
        if let Some(j) = (0..moduli.len()).find(|&j| residues[j] >= moduli[j]) {
            return Err(Error::Input(format!(
                "residue {} is not reduced modulo {}",
                residues[j], moduli[j]
            )));
        }
        Ok(CharacterVector { residues, moduli })
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }
}

/// Order of the image of `chi`: `lcm_j m_j / gcd(m_j, c_j)`.
pub fn character_order(chi: &CharacterVector) -> u64 {
    residue_order(&chi.residues, &chi.moduli)
}

fn residue_order(residues: &[u64], moduli: &[u64]) -> u64 {
    residues
        .iter()
        .zip(moduli)
        .fold(1, |acc, (&c, &m)| acc.lcm(&(m / m.gcd(&c))))
}

/// The mixed-radix residue space of `G`, last coordinate fastest.
#[derive(Clone, Debug)]
struct CharacterSpace {
    moduli: Vec<u64>,
    strides: Vec<u64>,
    size: u64,
}

impl CharacterSpace {
    fn new(g: &PrimaryDecomposition, bound: u64) -> Result<Self> {
        let order = g.order().value();
        if order > &BigUint::from(bound) {
            return Err(Error::OracleBoundExceeded {
                order: order.clone(),
                bound,
            });
        }
        let moduli: Vec<u64> = g
            .prime_power_factors()
            .map(|(r, a)| {
                BigUint::from(r)
                    .pow(a)
                    .to_u64()
                    .expect("factor bounded by the group order")
            })
            .collect();
        let mut strides = vec![1u64; moduli.len()];
        for j in (0..moduli.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * moduli[j + 1];
        }
        let size = moduli.iter().product();
        Ok(CharacterSpace {
            moduli,
            strides,
            size,
        })
    }

    fn decode(&self, mut index: u64, out: &mut [u64]) {
        for (j, &s) in self.strides.iter().enumerate() {
            out[j] = index / s;
            index %= s;
        }
    }

    fn encode(&self, residues: &[u64]) -> u64 {
        residues.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }
}

/// All `|G|` characters of `g` in lexicographic order.
pub fn enumerate_characters(
    g: &PrimaryDecomposition,
    bound: u64,
) -> Result<impl Iterator<Item = CharacterVector>> {
    let space = CharacterSpace::new(g, bound)?;
    Ok((0..space.size).map(move |index| {
        let mut residues = vec![0; space.moduli.len()];
        space.decode(index, &mut residues);
        CharacterVector {
            residues,
            moduli: space.moduli.clone(),
        }
    }))
}

/// Degree table obtained by walking the Frobenius orbits `chi -> chi^q`.
pub fn frobenius_orbits(
    g: &PrimaryDecomposition,
    q: &FieldSpec,
    options: &OracleOptions,
) -> Result<DegreeTable> {
    let space = CharacterSpace::new(g, options.bound)?;
    let p = q.characteristic();
    if let Some(&m) = space.moduli.iter().find(|&&m| u128::from(m) % p == 0) {
        return Err(Error::NotCoprime {
            a: q.order().clone(),
            b: g.order().value().clone(),
            common: BigUint::from(m).gcd(&BigUint::from(p)),
        });
    }
    let multipliers: Vec<u64> = space
        .moduli
        .iter()
        .map(|&m| {
            (q.order() % m)
                .to_u64()
                .expect("reduced below a u64 modulus")
        })
        .collect();

    let size = usize::try_from(space.size).expect("oracle bound fits in memory");
    let mut visited = vec![false; size];
    let mut lengths: BTreeMap<u64, u64> = BTreeMap::new();
    let mut expected_lengths: HashMap<u64, u64> = HashMap::new();
    let mut current = vec![0u64; space.moduli.len()];

    for start in 0..space.size {
        if visited[start as usize] {
            continue;
        }
        space.decode(start, &mut current);
        let start_order = residue_order(&current, &space.moduli);
        let mut index = start;
        let mut length = 0u64;
        loop {
            visited[index as usize] = true;
            length += 1;
            for ((c, &k), &m) in current.iter_mut().zip(&multipliers).zip(&space.moduli) {
                *c = ((u128::from(*c) * u128::from(k)) % u128::from(m)) as u64;
            }
            index = space.encode(&current);
            if index == start {
                break;
            }
            if options.check_orbits && residue_order(&current, &space.moduli) != start_order {
                return Err(Error::Invariant(format!(
                    "character order changes along the orbit of index {start}"
                )));
            }
        }
        if options.check_orbits {
            let expected = match expected_lengths.get(&start_order) {
                Some(&n) => n,
                None => {
                    let n = mul_order(q.order(), &BigUint::from(start_order))?
                        .to_u64()
                        .expect("orbit length below |G|");
                    expected_lengths.insert(start_order, n);
                    n
                }
            };
            if expected != length {
                return Err(Error::Invariant(format!(
                    "orbit of index {start} has length {length}, expected ord(q mod {start_order}) = {expected}"
                )));
            }
        }
        *lengths.entry(length).or_insert(0) += 1;
    }

    let counts = lengths
        .into_iter()
        .map(|(n, k)| (BigUint::from(n), BigUint::from(k)))
        .collect();
    DegreeTable::from_counts(counts, g.order().value().clone(), q.order().clone())
}
