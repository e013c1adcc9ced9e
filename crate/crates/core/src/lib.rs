//! Finite residuated lattices, BL-algebras and MV-algebras, with ideal
//! lattices of finite commutative rings as the main source of examples.

pub mod census;
pub mod ideal;
pub mod lattice;
pub mod ordinal;
pub mod ring;
pub mod shell;

pub use census::{are_isomorphic, canonical_key, CanonicalKey};
pub use ideal::{
    all_ideals, audit_ring_claims, check_blring, classify_ideals, ideal_lattice, principal_ideal,
    ClaimCheck, Ideal, IdealError, IdealLatticeMeta,
};
pub use lattice::{LatticeError, ResLattice, Report, Witness};
pub use ordinal::ordinal_product;
pub use ring::{build_ring, ring_units, Elem, FinRing, RingError, RingExpr, DEFAULT_SIZE_CAP};
