//! Error type shared by every operation in the crate.

use thiserror::Error;

/// Errors raised by library operations.
///
/// All operations are total over valid inputs; every precondition failure is
/// reported through one of these variants, never a panic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A moment prefix must hold at least one term.
    #[error("moment prefix must contain at least one term")]
    EmptyPrefix,

    /// The prefix is too short for the requested operation.
    #[error("operation requires {required} terms but the prefix has {actual}")]
    InsufficientTerms { required: usize, actual: usize },

    /// An enumeration or DP size exceeded its cap.
    #[error("{what} {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// A level-weight list does not cover a required level and is not terminated.
    #[error("level weights cover {available} levels but level {required} is needed")]
    InsufficientWeights { required: usize, available: usize },

    /// The leading term of a sequence must be strictly positive here.
    #[error("leading term must be positive")]
    ZeroLeadingTerm,

    /// Two walk-graph vertices are not joined by an edge.
    #[error("vertices are not adjacent")]
    NotAdjacent,

    /// A vertex violates the coordinate ordering or parity constraints.
    #[error("vertex coordinates violate ordering or parity constraints")]
    InvalidVertex,

    /// A closed walk fails a structural requirement.
    #[error("invalid closed walk: {0}")]
    InvalidWalk(String),

    /// A Dyck path step sequence is unbalanced or dips below the ground.
    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),

    /// A tuple of paths violates length or non-crossing requirements.
    #[error("invalid path tuple: {0}")]
    InvalidTuple(String),

    /// A shifted tuple lacks its forced padding steps or well-formed middle.
    #[error("shifted tuple padding is malformed: {0}")]
    MalformedPadding(String),

    /// A structurally invalid input: a malformed matrix, graph definition,
    /// file, or flag value.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The reachable component of an explicit graph admits no 2-coloring.
    #[error("graph is not bipartite")]
    NotBipartite,

    /// No level-weight system reproduces the given moments.
    #[error("moments admit no level-weight system: inconsistent at index {index}")]
    NotPathEnumerable { index: usize },

    /// The transform and the walk enumeration disagreed. This indicates an
    /// implementation defect, never an input problem.
    #[error("determinant/walk mismatch at n = {n} (implementation defect)")]
    MismatchBug { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
