//! Exact-arithmetic toolkit for moment sequences and their combinatorics.
//!
//! Everything here is computed over arbitrary-precision rationals — no
//! floating point, no rounding, no tolerances. The crate connects four views
//! of the same data and checks them against each other:
//!
//! - **Hankel side** ([`hankel`]): shifted Hankel matrices of a sequence,
//!   exact determinants, exact positive-semidefiniteness decisions with
//!   rational witness vectors, and the determinant transform
//!   `a'_n = det(a_{n+i+j})_{i,j=0}^{k-1}`.
//! - **Path side** ([`dyck`], [`weights`]): Dyck paths weighted per level,
//!   moments from weights by dynamic programming, and weights from moments
//!   by exact continued-fraction extraction.
//! - **Tuple side** ([`tuples`]): non-crossing k-tuples of Dyck paths, their
//!   lift to vertex-disjoint shifted tuples, and the enumeration that
//!   evaluates the k×k Hankel determinant combinatorially.
//! - **Walk side** ([`walk`], [`lanczos`]): closed walks on an ordered
//!   product graph over ℕ^k, the height-reading bijection with tuple space,
//!   and the exact squared-form reduction of any finite bipartite graph to
//!   path-graph weights.
//!
//! [`verify`] chains all four into a single constructive check, and [`cli`]
//! exposes each step as a batch subcommand with stable JSON reports.
//!
//! ```
//! use momentwalk::{
//!     hankel_transform, lgv_sum, moments_from_weights, LevelWeights, rational::int,
//! };
//!
//! // Unit level weights enumerate the Catalan numbers...
//! let unit = LevelWeights::ones(6);
//! let catalan = moments_from_weights(&unit, &int(1), 6)?;
//! assert_eq!(catalan.terms()[..5], [int(1), int(1), int(2), int(5), int(14)]);
//!
//! // ...and their 2x2 Hankel determinants count non-crossing path pairs.
//! let transformed = hankel_transform(&catalan, 2)?;
//! assert_eq!(transformed.term(2), &lgv_sum(&int(1), &unit, 2, 2)?);
//! # Ok::<(), momentwalk::Error>(())
//! ```

pub mod cli;
pub mod dyck;
pub mod error;
pub mod hankel;
pub mod lanczos;
pub mod rational;
pub mod sequence;
pub mod tuples;
pub mod verify;
pub mod walk;
pub mod weights;

pub use dyck::{enumerate_dyck, enumerate_dyck_with_cap, DyckPath, Step, DEFAULT_ENUMERATION_CAP};
pub use error::{Error, Result};
pub use hankel::{
    det_exact, hankel_matrix, hankel_transform, iterate_l2, psd_check, quadratic_form, sm_check,
    PsdVerdict, SmRefutation, SmVerdict, SymMatrix,
};
pub use lanczos::{
    lanczos_path_weights, lanczos_path_weights_with_cap, TridiagonalWeights,
    DEFAULT_LANCZOS_DEPTH_CAP,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use sequence::MomentPrefix;
pub use tuples::{
    drop_tuple, enumerate_noncrossing, enumerate_noncrossing_with_caps, lgv_sum, lgv_sum_with_caps,
    lift_tuple, PathTuple, ShiftedTuple, DEFAULT_TUPLE_HALF_LENGTH_CAP, DEFAULT_TUPLE_WIDTH_CAP,
};
pub use verify::{verify_theorem, verify_theorem_with, ComparisonRow, VerificationReport};
pub use walk::{
    closed_walk_moments, closed_walk_moments_with_cap, closed_walk_sum, closed_walk_sum_with_cap,
    edge_weight_directed, neighbors, phi, phi_inverse, walk_return_sums, ClosedWalk, ExplicitGraph,
    WalkGraph, WalkVertex, DEFAULT_WALK_CAP,
};
pub use weights::{
    extract_level_weights, moments_from_weights, moments_from_weights_with_cap, path_weight,
    weights_from_moments, LevelWeights, WeightExtraction,
};
