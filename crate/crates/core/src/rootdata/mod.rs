//! Root data of reductive groups over the fixed ambient space
//! (per-factor coroot coordinates) ⊕ Q^a, the canonical lattices they
//! determine, and named builders for the classical families.

pub mod build;
pub mod datum;
pub mod pi1;
pub mod tables;

pub use build::{build_named, central_twist, parse_group_spec, product, GroupSpec};
pub use datum::{derive_parts, validate_datum, Parts, ReductiveDatum, Violation};
pub use pi1::{pi1_class, pi1_torsion_elements, pi1_zero, Pi1Element};
pub use tables::{simple_factor_table, SimpleFactor, TypeTag};
