//! Isomorphism classes of small residuated lattices: canonical keys,
//! isomorphism search, MV-algebras of a given order, BL-algebras generated
//! by ordinal products, and a brute-force oracle to check them against.

mod canon;
mod families;
mod generate;
mod iso;
mod oracle;
mod partitions;
mod table;

use thiserror::Error;

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use families::{godel_chain, lukasiewicz_chain};
pub use generate::{
    dedup, enumerate_bl_ordinal, enumerate_bl_ordinal_keyed, enumerate_mv, enumerate_mv_keyed,
    BL_ORDINAL_CAP, MV_CAP,
};
pub use iso::are_isomorphic;
pub use oracle::{enumerate_reslat_oracle, enumerate_reslat_oracle_keyed, Filter, ORACLE_CAP};
pub use partitions::{factorizations, multiplicative_partitions};
pub use table::{census_row, census_table, CensusRow, Counts, REFERENCE_COUNTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("order {0} is below 2")]
    OrderTooSmall(usize),
}
