//! The end-to-end constructive check that the Hankel determinant transform
//! preserves path-enumerability.
//!
//! Pipeline: extract level weights from the input, apply the k×k determinant
//! transform, enumerate closed walks on the k-dimensional product graph with
//! the extracted weights, assert `a'_n = a'_0 · b_n` exactly for every
//! comparable index, and extract the walk sequence's own level weights as
//! the path-enumerability witness.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hankel::hankel_transform;
use crate::rational::Rational;
use crate::sequence::MomentPrefix;
use crate::walk::{closed_walk_moments_with_cap, WalkGraph, DEFAULT_WALK_CAP};
use crate::weights::{extract_level_weights, LevelWeights, WeightExtraction};

/// One exact comparison of the determinant route against the walk route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub n: usize,
    /// `a'_n` from the determinant transform.
    pub determinant: Rational,
    /// `a'_0 · b_n` from the walk enumeration.
    pub walk: Rational,
}

/// Artifacts of a successful verification run. Every row satisfied
/// `determinant == walk`; a mismatch is an implementation defect and is
/// reported as an error instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub k: usize,
    /// Level weights extracted from the input sequence.
    pub lambda: LevelWeights,
    /// The transformed sequence `a' = L_k(a)`.
    pub a_prime: MomentPrefix,
    /// Walk moments `b_0..b_{n_max}` on the product graph.
    pub walk_moments: Vec<Rational>,
    pub comparisons: Vec<ComparisonRow>,
    /// Level weights of the walk sequence: the path-enumerability witness.
    pub witness: LevelWeights,
    pub witness_nonnegative: bool,
}

impl VerificationReport {
    /// Largest index compared.
    pub fn max_compared(&self) -> usize {
        self.comparisons.last().map(|r| r.n).unwrap_or(0)
    }
}

/// Verify the transform/walk identity on every computable index.
pub fn verify_theorem(a: &MomentPrefix, k: usize) -> Result<VerificationReport> {
    verify_theorem_with(a, k, None, DEFAULT_WALK_CAP)
}

/// Verify with an optional comparison depth and an explicit walk cap.
///
/// The comparison range is `n = 0..=n_max` where `n_max` is the smallest of:
/// the last index of `L_k(a)`, the reach of the extracted weights, the
/// requested `depth`, and the walk cap.
///
/// Weight extraction here uses the full identifiable count (one weight per
/// moment past `a_0`) rather than the conservative public count, so the walk
/// route covers the whole transformed prefix. An input whose moments admit
/// no weight system is rejected as `NotPathEnumerable`.
pub fn verify_theorem_with(
    a: &MomentPrefix,
    k: usize,
    depth: Option<usize>,
    walk_cap: usize,
) -> Result<VerificationReport> {
    assert!(k >= 1, "k must be positive");
    if a.term(0).is_negative() || (a.term(0).is_zero() && !a.is_all_zero()) {
        return Err(Error::ZeroLeadingTerm);
    }
    let required = 2 * k + 1;
    if a.len() < required {
        return Err(Error::InsufficientTerms {
            required,
            actual: a.len(),
        });
    }

    let lambda = match extract_level_weights(a, a.len() - 1)? {
        WeightExtraction::Weights(w) => w,
        WeightExtraction::Inconsistent { index } => {
            return Err(Error::NotPathEnumerable { index });
        }
    };

    let a_prime = hankel_transform(a, k)?;

    // Reach: walks of half-length n touch levels up to n + 2k - 2.
    let reach = if lambda.is_terminated() {
        usize::MAX
    } else {
        (lambda.len() + 2).saturating_sub(2 * k)
    };
    let mut n_max = (a_prime.len() - 1).min(reach).min(walk_cap);
    if let Some(d) = depth {
        n_max = n_max.min(d);
    }

    let graph = WalkGraph::product(k, lambda.clone());
    let walk_moments = closed_walk_moments_with_cap(&graph, n_max, walk_cap)?;

    let mut comparisons = Vec::with_capacity(n_max + 1);
    for (n, b_n) in walk_moments.iter().enumerate() {
        let determinant = a_prime.term(n).clone();
        let walk = a_prime.term(0) * b_n;
        if determinant != walk {
            return Err(Error::MismatchBug { n });
        }
        comparisons.push(ComparisonRow {
            n,
            determinant,
            walk,
        });
    }

    let b_prefix = MomentPrefix::new(walk_moments.clone())?;
    let witness = match extract_level_weights(&b_prefix, n_max)? {
        WeightExtraction::Weights(w) => w,
        // Walk moments always come from a weight system, so this cannot
        // happen unless the enumeration itself is wrong.
        WeightExtraction::Inconsistent { index } => {
            return Err(Error::MismatchBug { n: index });
        }
    };
    let witness_nonnegative = witness.all_nonnegative();

    Ok(VerificationReport {
        k,
        lambda,
        a_prime,
        walk_moments,
        comparisons,
        witness,
        witness_nonnegative,
    })
}
