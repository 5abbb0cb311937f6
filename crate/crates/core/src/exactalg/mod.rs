//! Exact rational and integer linear algebra: normal forms, lattice algebra,
//! finitely generated abelian groups, and congruence-lattice solving.

pub mod congruence;
pub mod fgab;
pub mod lattice;
pub mod mat;
pub mod num;

pub use congruence::{congruence_lattice, Congruence};
pub use fgab::FgAbGroup;
pub use lattice::{image_in_finite_quotient, quotient_group, Lattice, LatticeQuotient};
pub use mat::{MatQ, MatZ, Snf};
pub use num::{Int, Rat};

/// Smith normal form of an integer matrix:
/// invariant factors (with zeros for rank deficit) plus the transforms.
pub fn snf(m: &MatZ) -> (Vec<Int>, MatZ, MatZ) {
    let s = m.snf();
    let mut factors = s.diag.clone();
    factors.resize(m.rows().min(m.cols()), num::int(0));
    (factors, s.u, s.v)
}
