//! Level weight systems and the two directions of the correspondence between
//! weights and moments: weights to moments by height-bounded dynamic
//! programming, moments to weights by Stieltjes continued-fraction
//! extraction.
//!
//! A weight system assigns the rational `λ_n` to level `n ≥ 1`; a Dyck path
//! picks up the factor `λ_n` for every upstep ending at height `n`. Because a
//! Dyck path has equally many upsteps ending at height `n` and downsteps
//! leaving it, `λ_n` plays the role of the squared per-step weight of the
//! level, and every pipeline in the crate stays rational even when the
//! per-step weights themselves would be irrational.

use num_traits::{One, Signed, Zero};

use crate::dyck::{DyckPath, Step, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequence::MomentPrefix;

/// Per-level weights `(λ_1, ..., λ_M)`, 1-based by height.
///
/// A terminated list pins every weight beyond `M` to exactly zero; a
/// non-terminated list leaves them unspecified, and operations that would
/// need one fail with `InsufficientWeights`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelWeights {
    lambda: Vec<Rational>,
    terminated: bool,
}

impl LevelWeights {
    pub fn new(lambda: Vec<Rational>, terminated: bool) -> Self {
        Self { lambda, terminated }
    }

    /// Unit weights `λ_1 = ... = λ_len = 1`, not terminated.
    pub fn ones(len: usize) -> Self {
        Self {
            lambda: vec![Rational::one(); len],
            terminated: false,
        }
    }

    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    /// Weight of 1-based `level`; `None` when the level is beyond a
    /// non-terminated list.
    pub fn level(&self, level: usize) -> Option<Rational> {
        assert!(level >= 1, "levels are 1-based");
        if level <= self.lambda.len() {
            Some(self.lambda[level - 1].clone())
        } else if self.terminated {
            Some(Rational::zero())
        } else {
            None
        }
    }

    /// True when every listed weight is `>= 0`.
    pub fn all_nonnegative(&self) -> bool {
        self.lambda.iter().all(|l| !l.is_negative())
    }

    fn require_level(&self, level: usize) -> Result<Rational> {
        self.level(level).ok_or(Error::InsufficientWeights {
            required: level,
            available: self.lambda.len(),
        })
    }
}

/// Weight of a Dyck path: the product over upsteps ending at height `h` of
/// `λ_{h+shift}`. `shift` must be even; shifting by `2j-2` evaluates the path
/// against the level system seen from baseline `2j-2`.
pub fn path_weight(p: &DyckPath, lw: &LevelWeights, shift: usize) -> Result<Rational> {
    assert!(shift.is_multiple_of(2), "level shift must be even");
    let mut acc = Rational::one();
    let mut height = 0usize;
    for step in p.steps() {
        match step {
            Step::Up => {
                height += 1;
                acc *= lw.require_level(height + shift)?;
            }
            Step::Down => height -= 1,
        }
    }
    Ok(acc)
}

/// Moments `m_0..m_{n_max}` of the weight system with `m_0 = 1`, by the
/// height-bounded step DP. Fails with `InsufficientWeights` when a
/// non-terminated list does not cover height `n_max`.
pub(crate) fn dyck_moment_dp(lw: &LevelWeights, n_max: usize) -> Result<Vec<Rational>> {
    if !lw.is_terminated() && lw.len() < n_max {
        return Err(Error::InsufficientWeights {
            required: n_max,
            available: lw.len(),
        });
    }
    let mut state = vec![Rational::zero(); n_max + 2];
    state[0] = Rational::one();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Rational::one());
    for i in 1..=(2 * n_max) {
        let mut next = vec![Rational::zero(); n_max + 2];
        for (h, v) in state.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if h < n_max {
                let lam = lw
                    .level(h + 1)
                    .expect("coverage checked before the DP runs");
                next[h + 1] += v * lam;
            }
            if h >= 1 {
                let carried = v.clone();
                next[h - 1] += carried;
            }
        }
        state = next;
        if i % 2 == 0 {
            out.push(state[0].clone());
        }
    }
    Ok(out)
}

/// The sequence `a_n = a0 · Σ_{P ∈ D_n} path_weight(P)` for `n = 0..=n_max`.
///
/// Computed by dynamic programming over heights, not by enumeration, but it
/// equals the enumeration sum exactly.
pub fn moments_from_weights(
    lw: &LevelWeights,
    a0: &Rational,
    n_max: usize,
) -> Result<MomentPrefix> {
    moments_from_weights_with_cap(lw, a0, n_max, DEFAULT_ENUMERATION_CAP)
}

pub fn moments_from_weights_with_cap(
    lw: &LevelWeights,
    a0: &Rational,
    n_max: usize,
    cap: usize,
) -> Result<MomentPrefix> {
    if n_max > cap {
        return Err(Error::CapExceeded {
            what: "moment index",
            requested: n_max,
            cap,
        });
    }
    let normalized = dyck_moment_dp(lw, n_max)?;
    MomentPrefix::new(normalized.into_iter().map(|m| m * a0).collect())
}

/// Result of weight extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightExtraction {
    Weights(LevelWeights),
    /// An exact zero forced termination, but `a_index` disagrees with the
    /// terminated system's prediction.
    Inconsistent {
        index: usize,
    },
}

/// Recover level weights from a moment prefix.
///
/// Returns `λ_1..λ_M` with `M = ⌊len/2⌋`, the classically safe count for a
/// prefix of this length. An exact zero among the extracted weights means the
/// system terminates there; the remaining moments are then validated against
/// the terminated system and any disagreement is reported as `Inconsistent`
/// with the first bad index.
///
/// `a_0 = 0` with an all-zero tail yields the empty terminated system;
/// any other non-positive `a_0` is `ZeroLeadingTerm`.
pub fn weights_from_moments(a: &MomentPrefix) -> Result<WeightExtraction> {
    extract_level_weights(a, a.len() / 2)
}

/// Weight extraction with an explicit coefficient count.
///
/// `count` is clamped to `len - 1`, the largest index identifiable from the
/// prefix: `λ_j` first enters `a_j`, through the single staircase path, with
/// coefficient `a_0 λ_1 ⋯ λ_{j-1}`.
pub fn extract_level_weights(a: &MomentPrefix, count: usize) -> Result<WeightExtraction> {
    let a0 = a.term(0);
    if a0.is_zero() {
        if a.is_all_zero() {
            return Ok(WeightExtraction::Weights(LevelWeights::new(vec![], true)));
        }
        return Err(Error::ZeroLeadingTerm);
    }
    if a0.is_negative() {
        return Err(Error::ZeroLeadingTerm);
    }
    let count = count.min(a.len() - 1);
    let moments: Vec<Rational> = a.terms().iter().map(|t| t / a0).collect();

    let mut lambda: Vec<Rational> = Vec::with_capacity(count);
    let mut staircase = Rational::one(); // λ_1 ⋯ λ_{j-1}
    for j in 1..=count {
        // Paths of length 2j confined below height j contribute the
        // λ_j-free part of m_j; the staircase carries the rest.
        let truncated = LevelWeights::new(lambda.clone(), true);
        let below = dyck_moment_dp(&truncated, j)?;
        let lam_j = (&moments[j] - &below[j]) / &staircase;
        if lam_j.is_zero() {
            return validate_terminated(&moments, lambda);
        }
        staircase *= &lam_j;
        lambda.push(lam_j);
    }
    Ok(WeightExtraction::Weights(LevelWeights::new(lambda, false)))
}

fn validate_terminated(moments: &[Rational], lambda: Vec<Rational>) -> Result<WeightExtraction> {
    let terminated = LevelWeights::new(lambda, true);
    let predicted = dyck_moment_dp(&terminated, moments.len() - 1)?;
    for (i, (have, want)) in moments.iter().zip(&predicted).enumerate() {
        if have != want {
            return Ok(WeightExtraction::Inconsistent { index: i });
        }
    }
    Ok(WeightExtraction::Weights(terminated))
}
