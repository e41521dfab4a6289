use thiserror::Error;

use crate::group::MAX_ORDER;

/// Errors produced by group construction, map handling and the checks in
/// [`crate::twisted`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds the table ceiling of {MAX_ORDER} elements")]
    TooLarge,
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("element id {id} out of range for a group of order {order}")]
    BadElement { id: usize, order: usize },
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree {0} outside the supported range 2..=6")]
    DegreeOutOfRange(usize),
    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),
    #[error("group has no relators attached")]
    MissingRelators,
    #[error("expected {expected} generator images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("relator {index} ({word}) is not satisfied by the generator images")]
    RelatorViolated { index: usize, word: String },
    #[error("generator images do not extend to a homomorphism")]
    NotHomomorphism,
    #[error("maps act on different groups")]
    ParentMismatch,
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("search space of {0} generator-image tuples exceeds the enumeration limit")]
    SearchTooLarge(u128),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("unsupported map: {0}")]
    UnsupportedMap(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
