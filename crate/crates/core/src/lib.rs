//! Exact lattice-theoretic invariants of moduli of principal bundles over
//! marked curves: root data of reductive groups, Weyl-invariant integral
//! bilinear forms, Picard/Neron-Severi group presentations, and the
//! evaluation/weight cokernels that obstruct gerbe triviality.
//!
//! Everything is computed in exact rational arithmetic; group isomorphism
//! types are reported as invariant-factor chains.

pub mod error;
pub mod exactalg;
pub mod invforms;
pub mod oracle7;
pub mod picard;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
