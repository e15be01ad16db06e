use thiserror::Error;

use crate::lattice::LatticeError;

/// Default cap on the number of candidates any exhaustive search may visit.
pub const DEFAULT_SEARCH_CAP: u128 = 1 << 24;

/// The active search cap: `QCALC_SEARCH_CAP` if set and parseable, else the default.
pub fn search_cap() -> u128 {
    std::env::var("QCALC_SEARCH_CAP")
        .ok()
        .and_then(|s| s.trim().parse::<u128>().ok())
        .unwrap_or(DEFAULT_SEARCH_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("duplicate object `{0}`")]
    DuplicateObject(String),
    #[error("malformed quantaloid `{name}`: {reason}")]
    MalformedQuantaloid { name: String, reason: String },
    #[error("malformed category `{name}`: {reason}")]
    MalformedCategory { name: String, reason: String },
    #[error("arrows not composable: {0}")]
    NotComposable(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("boundary mismatch: {0}")]
    Mismatch(String),
    #[error("functor domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("search space for {what} has {candidates} candidates, above the cap of {cap}")]
    SearchSpaceExceeded { what: String, candidates: u128, cap: u128 },
    #[error("distributor `{0}` is not a left adjoint")]
    NotLeftAdjoint(String),
    #[error("category `{0}` is not M-cocomplete")]
    NotMCocomplete(String),
    #[error("invalid distributor `{name}`: {reason}")]
    InvalidDistributor { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with `SearchSpaceExceeded` when `candidates` exceeds the active cap.
pub fn guard(what: impl Into<String>, candidates: u128) -> Result<()> {
    let cap = search_cap();
    if candidates > cap {
        return Err(Error::SearchSpaceExceeded { what: what.into(), candidates, cap });
    }
    Ok(())
}

/// Product of sizes, saturating instead of overflowing.
pub fn product<I: IntoIterator<Item = usize>>(sizes: I) -> u128 {
    sizes
        .into_iter()
        .fold(1u128, |acc, s| acc.saturating_mul(s as u128))
}
