use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeEntry {
    pub degree: BigUint,
    pub multiplicity: BigUint,
}

/// Degrees of the irreducible representations of a group over `F_q` with
/// their multiplicities, sorted by degree.
///
/// Construction checks that `sum(degree * multiplicity)` equals the group
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeTable {
    entries: Vec<DegreeEntry>,
    group_order: BigUint,
    field_q: BigUint,
}

impl DegreeTable {
    /// Builds a table from `degree -> multiplicity` counts. Zero multiplicities
    /// are dropped.
    pub fn from_counts(
        counts: BTreeMap<BigUint, BigUint>,
        group_order: BigUint,
        field_q: BigUint,
    ) -> Result<Self> {
        let entries: Vec<DegreeEntry> = counts
            .into_iter()
            .filter(|(_, k)| !k.is_zero())
            .map(|(degree, multiplicity)| DegreeEntry {
                degree,
                multiplicity,
            })
            .collect();
        if entries.iter().any(|e| e.degree.is_zero()) {
            return Err(Error::Invariant("degree 0 in table".into()));
        }
        let table = DegreeTable {
            entries,
            group_order,
            field_q,
        };
        let dim = table.dimension();
        if dim != table.group_order {
            return Err(Error::Invariant(format!(
                "degrees account for dimension {dim}, group order is {}",
                table.group_order
            )));
        }
        Ok(table)
    }

    pub fn entries(&self) -> &[DegreeEntry] {
        &self.entries
    }

    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    pub fn field_q(&self) -> &BigUint {
        &self.field_q
    }

    /// `(degree, multiplicity)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (&BigUint, &BigUint)> {
        self.entries.iter().map(|e| (&e.degree, &e.multiplicity))
    }

    pub fn degrees(&self) -> BTreeSet<BigUint> {
        self.entries.iter().map(|e| e.degree.clone()).collect()
    }

    pub fn max_degree(&self) -> Option<&BigUint> {
        self.entries.last().map(|e| &e.degree)
    }

    /// Total number of irreducibles.
    pub fn count(&self) -> BigUint {
        self.entries.iter().map(|e| &e.multiplicity).sum()
    }

    /// `sum(degree * multiplicity)`.
    pub fn dimension(&self) -> BigUint {
        self.entries
            .iter()
            .map(|e| &e.degree * &e.multiplicity)
            .sum()
    }

    /// Compact notation: `1, 2, 4^3, 6, 12^2`.
    pub fn compact(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DegreeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if e.multiplicity.is_one() {
                write!(f, "{}", e.degree)?;
            } else {
                write!(f, "{}^{}", e.degree, e.multiplicity)?;
            }
        }
        Ok(())
    }
}
