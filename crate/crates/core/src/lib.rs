//! Categories enriched in small quantaloids.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod mcomplete;
pub mod morita;
pub mod presheaf;
pub mod qcat;
pub mod qdist;
pub mod quantaloid;
pub mod realline;
pub mod report;

pub use error::{Error, Result};
pub use lattice::{FiniteLattice, LatticeError};
pub use qcat::{functors_adjoint, QCategory, QFunctor};
pub use qdist::QDistributor;
pub use quantaloid::{Arrow, Builtin, Quantaloid};
