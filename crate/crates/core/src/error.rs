//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("pairing is degenerate on the span of the lattice")]
    DegeneratePairing,
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("not a sublattice")]
    NotASublattice,
    #[error("element does not lie in the big lattice")]
    NotInBigLattice,
    #[error("unsupported simple type: {0}")]
    UnsupportedType(String),
    #[error("invalid isogeny data: {0}")]
    InvalidIsogeny(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vector does not lie in the cocharacter lattice")]
    NotInLattice,
    #[error("evaluation functional is not integral on the derived-subgroup lattice")]
    NonIntegralEvaluation,
    #[error("pulled-back form is not expressible as a Weyl-invariant form on the source")]
    NotWInvariantPullback,
    #[error("component class is incompatible with the homomorphism")]
    IncompatibleDelta,
    #[error("form is not even on the derived-subgroup lattice")]
    FormNotDEven,
    #[error("operation requires genus >= 1")]
    Genus0NotHere,
    #[error("genus out of range for this operation: {0}")]
    GenusOutOfRange(String),
    #[error("operation requires at least one marked point")]
    NeedsMarkedPoint,
    #[error("brute-force Weyl enumeration is limited to rank <= 3")]
    RankTooLarge,
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("datum is invalid: {0}")]
    InvalidDatum(String),
}
