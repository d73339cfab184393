//! Exact symmetric functions in the power-sum basis, with plethysm, Schur
//! expansions, the psi-driven representation families, plethystic series and a
//! registry of machine-checked identities.

pub mod error;
pub mod numtheory;
pub mod partition;
pub mod repmodules;
pub mod schur;
pub mod series;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use symfunc::{PowerSumPoly, Rational};
