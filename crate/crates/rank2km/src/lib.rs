//! Exact computation in rank-2 Kac–Moody root systems of type `H(a,b)`, `ab >= 4`.
//!
//! Real roots are enumerated as four families `LL`, `LU` (orbit of α₁) and
//! `SU`, `SL` (orbit of α₂) indexed by `j ∈ ℤ`; lattice vectors are stored in
//! the simple-root basis with arbitrary-precision coordinates.

pub mod cartan;
pub mod error;
pub mod growth;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod roots;
pub mod structure;
pub mod subsystems;
pub mod sums;
pub mod verify;

pub use cartan::{CartanData, Kind};
pub use error::{Error, Result};
pub use lattice::{LatticeInt, RootVector, Sublattice};
pub use oracle::{SqrtTwo, SqrtTwoScalar};
pub use roots::{Family, RealRoot, Reflection, RootClass, WeylWord};
pub use structure::{CommutatorResult, SignAssignment, SignModel, SpecialPair};

/// Root-lattice vector with big-integer coordinates.
pub type Vector = RootVector<num_bigint::BigInt>;
