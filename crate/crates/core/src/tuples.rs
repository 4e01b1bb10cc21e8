//! k-tuples of mutually non-crossing Dyck paths, the lift to vertex-disjoint
//! shifted tuples, and the enumeration side of the determinant identity.
//!
//! The ground form — k paths of equal length with `P_j` pointwise below
//! `P_{j+1}`, touching allowed — is canonical. The shifted form raises `P_j`
//! by `2(j-1)`, pads it with forced upsteps and downsteps, and starts it at
//! `x = -2(j-1)`; it exists only through [`lift_tuple`] and [`drop_tuple`].

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::dyck::{enumerate_dyck_with_cap, DyckPath, Step};
use crate::error::{Error, Result};
use crate::rational::{pow, Rational};
use crate::weights::{path_weight, LevelWeights};

/// Caps for tuple enumeration.
pub const DEFAULT_TUPLE_HALF_LENGTH_CAP: usize = 6;
pub const DEFAULT_TUPLE_WIDTH_CAP: usize = 4;

/// An ordered tuple `(P_1, ..., P_k)` of Dyck paths of equal length with
/// `P_j` lying below `P_{j+1}` at every index (touching allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTuple {
    paths: Vec<DyckPath>,
}

impl PathTuple {
    pub fn new(paths: Vec<DyckPath>) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::InvalidTuple(
                "tuple must hold at least one path".into(),
            ));
        }
        let len = paths[0].steps().len();
        if paths.iter().any(|p| p.steps().len() != len) {
            return Err(Error::InvalidTuple("paths must share one length".into()));
        }
        let heights: Vec<Vec<usize>> = paths.iter().map(DyckPath::heights).collect();
        for (j, pair) in heights.windows(2).enumerate() {
            if let Some(i) = pair[0].iter().zip(&pair[1]).position(|(lo, hi)| lo > hi) {
                return Err(Error::InvalidTuple(format!(
                    "path {} rises above path {} at index {i}",
                    j + 1,
                    j + 2
                )));
            }
        }
        Ok(Self { paths })
    }

    pub fn paths(&self) -> &[DyckPath] {
        &self.paths
    }

    pub fn width(&self) -> usize {
        self.paths.len()
    }

    pub fn half_length(&self) -> usize {
        self.paths[0].half_length()
    }

    /// Concatenated step string of all paths, used as the canonical sort key.
    pub fn step_string(&self) -> String {
        self.paths.iter().map(DyckPath::step_string).collect()
    }
}

/// All non-crossing k-tuples over Dyck paths of length `2n`, each exactly
/// once, ordered lexicographically by concatenated step string.
pub fn enumerate_noncrossing(n: usize, k: usize) -> Result<Vec<PathTuple>> {
    enumerate_noncrossing_with_caps(n, k, DEFAULT_TUPLE_HALF_LENGTH_CAP, DEFAULT_TUPLE_WIDTH_CAP)
}

pub fn enumerate_noncrossing_with_caps(
    n: usize,
    k: usize,
    n_cap: usize,
    k_cap: usize,
) -> Result<Vec<PathTuple>> {
    assert!(k >= 1, "tuple width must be positive");
    if n > n_cap {
        return Err(Error::CapExceeded {
            what: "tuple half-length",
            requested: n,
            cap: n_cap,
        });
    }
    if k > k_cap {
        return Err(Error::CapExceeded {
            what: "tuple width",
            requested: k,
            cap: k_cap,
        });
    }
    let mut paths = enumerate_dyck_with_cap(n, n_cap)?;
    paths.sort_by_key(DyckPath::step_string);
    let heights: Vec<Vec<usize>> = paths.iter().map(DyckPath::heights).collect();
    // dominates[a][b]: path b lies weakly above path a everywhere.
    let dominates: Vec<Vec<bool>> = heights
        .iter()
        .map(|lo| {
            heights
                .iter()
                .map(|hi| lo.iter().zip(hi).all(|(l, h)| l <= h))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    build_tuples(&paths, &dominates, k, &mut chosen, &mut out);
    Ok(out)
}

fn build_tuples(
    paths: &[DyckPath],
    dominates: &[Vec<bool>],
    k: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<PathTuple>,
) {
    if chosen.len() == k {
        out.push(PathTuple {
            paths: chosen.iter().map(|&i| paths[i].clone()).collect(),
        });
        return;
    }
    for i in 0..paths.len() {
        if let Some(&prev) = chosen.last() {
            if !dominates[prev][i] {
                continue;
            }
        }
        chosen.push(i);
        build_tuples(paths, dominates, k, chosen, out);
        chosen.pop();
    }
}

/// The lifted, vertex-disjoint form: path `j` (1-based) starts at
/// `(-2(j-1), 0)` with its middle raised to baseline `2(j-1)`.
///
/// The step lists are stored raw; [`drop_tuple`] re-validates the forced
/// padding, so malformed hand-built tuples are representable and rejected
/// there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedTuple {
    half_length: usize,
    paths: Vec<Vec<Step>>,
}

impl ShiftedTuple {
    /// Build from raw step lists. Path `j` (0-based) must have
    /// `2n + 4j` steps.
    pub fn from_parts(half_length: usize, paths: Vec<Vec<Step>>) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::MalformedPadding(
                "tuple must hold at least one path".into(),
            ));
        }
        for (j, p) in paths.iter().enumerate() {
            let want = 2 * half_length + 4 * j;
            if p.len() != want {
                return Err(Error::MalformedPadding(format!(
                    "path {} must have {want} steps, found {}",
                    j + 1,
                    p.len()
                )));
            }
        }
        Ok(Self { half_length, paths })
    }

    pub fn half_length(&self) -> usize {
        self.half_length
    }

    pub fn width(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Vec<Step>] {
        &self.paths
    }

    /// Start abscissa of path `j` (0-based).
    pub fn start_x(&self, j: usize) -> i64 {
        -2 * (j as i64)
    }

    /// Lattice vertices visited by path `j` (0-based), starting at height 0.
    pub fn vertices(&self, j: usize) -> Vec<(i64, i64)> {
        let mut x = self.start_x(j);
        let mut y = 0i64;
        let mut out = Vec::with_capacity(self.paths[j].len() + 1);
        out.push((x, y));
        for step in &self.paths[j] {
            x += 1;
            y += match step {
                Step::Up => 1,
                Step::Down => -1,
            };
            out.push((x, y));
        }
        out
    }

    /// True when no two paths share a lattice vertex.
    pub fn is_vertex_disjoint(&self) -> bool {
        let mut seen: HashSet<(i64, i64)> = HashSet::new();
        for j in 0..self.paths.len() {
            for v in self.vertices(j) {
                if !seen.insert(v) {
                    return false;
                }
            }
        }
        true
    }
}

/// Raise each path to its baseline and add the forced padding. The output is
/// vertex-disjoint exactly because the input tuple is non-crossing.
pub fn lift_tuple(t: &PathTuple) -> ShiftedTuple {
    let paths = t
        .paths()
        .iter()
        .enumerate()
        .map(|(j, p)| {
            let mut steps = Vec::with_capacity(p.steps().len() + 4 * j);
            steps.extend(std::iter::repeat_n(Step::Up, 2 * j));
            steps.extend_from_slice(p.steps());
            steps.extend(std::iter::repeat_n(Step::Down, 2 * j));
            steps
        })
        .collect();
    let lifted = ShiftedTuple {
        half_length: t.half_length(),
        paths,
    };
    debug_assert!(lifted.is_vertex_disjoint());
    lifted
}

/// Exact inverse of [`lift_tuple`]: strip the forced padding and lower each
/// middle back to the ground.
pub fn drop_tuple(s: &ShiftedTuple) -> Result<PathTuple> {
    let mut dropped = Vec::with_capacity(s.width());
    for (j, steps) in s.paths().iter().enumerate() {
        let pad = 2 * j;
        let middle_len = steps.len() - 2 * pad;
        if steps[..pad].iter().any(|&st| st != Step::Up) {
            return Err(Error::MalformedPadding(format!(
                "path {} must begin with {pad} upsteps",
                j + 1
            )));
        }
        if steps[pad + middle_len..].iter().any(|&st| st != Step::Down) {
            return Err(Error::MalformedPadding(format!(
                "path {} must end with {pad} downsteps",
                j + 1
            )));
        }
        let middle = steps[pad..pad + middle_len].to_vec();
        let path = DyckPath::new(middle).map_err(|_| {
            Error::MalformedPadding(format!("path {} dips below its baseline of {pad}", j + 1))
        })?;
        dropped.push(path);
    }
    PathTuple::new(dropped)
}

/// The non-intersecting-tuple sum: `a0^k` times the sum over all lifted
/// k-tuples of the product of full path weights, evaluated by enumerating
/// the ground form and weighting each path as its lift.
///
/// The lift of path `j` adds forced upsteps through levels `1..=2(j-1)` and
/// the matching downsteps, so its weight is `λ_1 ⋯ λ_{2(j-1)}` times the
/// shifted weight of the middle. Including that padding factor is what makes
/// the sum equal the k×k Hankel determinant of the weight system's moment
/// sequence; the ground-form sum without it is the walk-moment
/// normalization `b_n`.
pub fn lgv_sum(a0: &Rational, lw: &LevelWeights, k: usize, n: usize) -> Result<Rational> {
    lgv_sum_with_caps(
        a0,
        lw,
        k,
        n,
        DEFAULT_TUPLE_HALF_LENGTH_CAP,
        DEFAULT_TUPLE_WIDTH_CAP,
    )
}

pub fn lgv_sum_with_caps(
    a0: &Rational,
    lw: &LevelWeights,
    k: usize,
    n: usize,
    n_cap: usize,
    k_cap: usize,
) -> Result<Rational> {
    let tuples = enumerate_noncrossing_with_caps(n, k, n_cap, k_cap)?;
    // Padding factor of the lift of path j (0-based): λ_1 ⋯ λ_{2j}.
    let mut pad = Vec::with_capacity(k);
    let mut acc_pad = Rational::one();
    for j in 0..k {
        if j > 0 {
            for h in (2 * j - 1)..=(2 * j) {
                acc_pad *= lw.level(h).ok_or(Error::InsufficientWeights {
                    required: h,
                    available: lw.len(),
                })?;
            }
        }
        pad.push(acc_pad.clone());
    }
    let mut acc = Rational::zero();
    for t in &tuples {
        let mut product = Rational::one();
        for (j, p) in t.paths().iter().enumerate() {
            product *= &pad[j];
            product *= path_weight(p, lw, 2 * j)?;
        }
        acc += product;
    }
    Ok(pow(a0, k) * acc)
}
