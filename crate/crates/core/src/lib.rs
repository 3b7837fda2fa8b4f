//! Irreducible representations of finite abelian groups over finite fields.
//!
//! For a finite abelian group `G` and a prime power `q` prime to `|G|`, the
//! irreducible `F_q G`-modules correspond to orbits of `chi -> chi^q` on the
//! complex characters of `G`. This crate counts them in closed form from the
//! primary decomposition of `G` ([`counts`]) and, independently, by walking
//! the orbits ([`oracle`]).
//!
//! ```
//! use abelreps::{degree_table, parse_group_spec, primary_decomposition, FieldSpec};
//!
//! let g = primary_decomposition(&parse_group_spec("C9xC5").unwrap()).unwrap();
//! let table = degree_table(&g, &FieldSpec::new(2, 1).unwrap()).unwrap();
//! assert_eq!(table.compact(), "1, 2, 4^3, 6, 12^2");
//! ```

pub mod cli;
pub mod counts;
pub mod error;
pub mod field;
pub mod group;
pub mod numtheory;
pub mod oracle;
pub mod table;

pub use counts::{
    card_i_d, card_i_prime_power, degree_table, degree_table_with_divisors, factor_quotient_order,
    relevant_divisors, wedderburn_decomposition, DivisorContribution,
};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use group::{parse_group_spec, primary_decomposition, CyclicFactorList, PrimaryDecomposition};
pub use numtheory::{divisors, factor, mul_order, FactoredInteger};
pub use oracle::{
    character_order, enumerate_characters, frobenius_orbits, CharacterVector, OracleOptions,
};
pub use table::{DegreeEntry, DegreeTable};
