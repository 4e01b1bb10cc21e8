//! Exact reduction of a bipartite graph's walk moments to path-graph level
//! weights by the three-term recurrence, run entirely in squared form.
//!
//! The recurrence tracks unnormalized Krylov vectors and their squared norms:
//! `r_0` is the root indicator, `r_{m+1} = A r_m - (N_m / N_{m-1}) r_{m-1}`,
//! and the squared off-diagonal entries of the tridiagonal reduction are
//! `β_m² = N_m / N_{m-1}`. No square root is ever taken, so every stored
//! quantity is rational. Bipartiteness makes the diagonal vanish identically.
//!
//! A squared norm of exactly zero is a breakdown: the Krylov space has
//! stabilized, the weight list is complete, and the induced path graph
//! reproduces every walk moment of the source graph, not just those up to
//! the requested depth.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::walk::ExplicitGraph;
use crate::weights::LevelWeights;

/// Cap on the reduction depth.
pub const DEFAULT_LANCZOS_DEPTH_CAP: usize = 32;

/// Squared off-diagonal entries `(β_1², β_2², ...)` of the zero-diagonal
/// tridiagonal reduction; equivalently the level weights of the path graph
/// that reproduces the source graph's closed-walk moments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridiagonalWeights {
    beta_sq: Vec<Rational>,
    terminated: bool,
}

impl TridiagonalWeights {
    pub fn beta_sq(&self) -> &[Rational] {
        &self.beta_sq
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    /// Number of weights produced; on termination this is the exact rank
    /// bound of the Krylov space minus one.
    pub fn rank(&self) -> usize {
        self.beta_sq.len()
    }

    /// View as a level-weight system, terminated exactly when the recurrence
    /// broke down.
    pub fn as_level_weights(&self) -> LevelWeights {
        LevelWeights::new(self.beta_sq.clone(), self.terminated)
    }
}

/// Run the squared-form recurrence from the root of `g` for `depth` steps.
///
/// Returns `β_1²..β_m²` with `m ≤ depth` and `terminated = true` when a zero
/// squared norm occurred at some step `≤ depth + 1`; one step beyond `depth`
/// is probed so a breakdown exactly at the boundary is reported. The path
/// graph with the returned weights reproduces the walk moments
/// `(A^{2n})_{root,root}` for all `n ≤ depth`, and for all `n` on
/// termination.
pub fn lanczos_path_weights(g: &ExplicitGraph, depth: usize) -> Result<TridiagonalWeights> {
    lanczos_path_weights_with_cap(g, depth, DEFAULT_LANCZOS_DEPTH_CAP)
}

pub fn lanczos_path_weights_with_cap(
    g: &ExplicitGraph,
    depth: usize,
    cap: usize,
) -> Result<TridiagonalWeights> {
    assert!(depth >= 1, "depth must be positive");
    if depth > cap {
        return Err(Error::CapExceeded {
            what: "lanczos depth",
            requested: depth,
            cap,
        });
    }
    let n = g.vertex_count();
    let mut r_prev: Vec<Rational> = vec![Rational::zero(); n];
    let mut r_cur: Vec<Rational> = vec![Rational::zero(); n];
    r_cur[g.root()] = Rational::one();
    let mut norm_prev = Rational::one(); // N_0
    let mut norm_prev_prev: Option<Rational> = None;

    let mut beta_sq = Vec::with_capacity(depth);
    let mut terminated = false;
    for m in 1..=(depth + 1) {
        let mut r_next = g.apply_adjacency(&r_cur);
        if m >= 2 {
            let gamma = &norm_prev / norm_prev_prev.as_ref().unwrap();
            for (next, prev) in r_next.iter_mut().zip(&r_prev) {
                *next -= &gamma * prev;
            }
        }
        let norm: Rational = r_next.iter().map(|x| x * x).sum();
        if norm.is_zero() {
            terminated = true;
            break;
        }
        if m > depth {
            break;
        }
        beta_sq.push(&norm / &norm_prev);
        r_prev = r_cur;
        r_cur = r_next;
        norm_prev_prev = Some(norm_prev);
        norm_prev = norm;
    }
    Ok(TridiagonalWeights {
        beta_sq,
        terminated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::walk::{closed_walk_moments_with_cap, WalkGraph};
    use crate::weights::moments_from_weights_with_cap;

    fn path_graph(beta_sq: &[Rational]) -> ExplicitGraph {
        let n = beta_sq.len() + 1;
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges = beta_sq
            .iter()
            .enumerate()
            .map(|(i, w)| (i, i + 1, w.clone()))
            .collect();
        ExplicitGraph::new(labels, edges, 0).unwrap()
    }

    /// Oracle: `(A^len)_{root,root}` by dense matrix powers.
    fn matrix_power_entry(g: &ExplicitGraph, len: usize) -> Rational {
        let n = g.vertex_count();
        let mut a = vec![vec![Rational::zero(); n]; n];
        for (i, j, w) in g.edges() {
            a[*i][*j] = w.clone();
            a[*j][*i] = w.clone();
        }
        let mut power = vec![vec![Rational::zero(); n]; n];
        for (i, row) in power.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        for _ in 0..len {
            let mut next = vec![vec![Rational::zero(); n]; n];
            for i in 0..n {
                for l in 0..n {
                    if power[i][l].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        let delta = &power[i][l] * &a[l][j];
                        next[i][j] += delta;
                    }
                }
            }
            power = next;
        }
        power[g.root()][g.root()].clone()
    }

    #[test]
    fn path_graph_weights_are_fixed_points() {
        // Tridiagonal input is a fixed point: a path graph with edge weights
        // (2, 3) has squared off-diagonals (4, 9) and the recurrence must
        // return exactly those, noticing the breakdown right past the end.
        let g = path_graph(&[int(2), int(3)]);
        let t = lanczos_path_weights(&g, 2).unwrap();
        assert_eq!(t.beta_sq(), &[int(4), int(9)][..]);
        assert!(t.is_terminated());
        assert_eq!(t.rank(), 2);
    }

    #[test]
    fn double_star_yields_mixed_levels() {
        // Root joined to two middle vertices, which fan out to three leaves:
        // squared level weights (2, 3), terminated. The induced path graph
        // reproduces the walk moments even though no rational path graph has
        // these edge weights.
        let g = ExplicitGraph::new(
            (0..6).map(|i| i.to_string()).collect(),
            vec![
                (0, 1, int(1)),
                (0, 2, int(1)),
                (1, 3, int(1)),
                (1, 4, int(1)),
                (2, 4, int(1)),
                (2, 5, int(1)),
            ],
            0,
        )
        .unwrap();
        let t = lanczos_path_weights(&g, 4).unwrap();
        assert_eq!(t.beta_sq()[..2], [int(2), int(3)]);
        let depth = 4;
        let reduced =
            moments_from_weights_with_cap(&t.as_level_weights(), &int(1), depth, 8).unwrap();
        let source = closed_walk_moments_with_cap(&WalkGraph::Explicit(g), depth, 8).unwrap();
        assert_eq!(reduced.terms(), &source[..]);
    }

    #[test]
    fn four_cycle_reduces_to_two_levels() {
        let g = ExplicitGraph::new(
            (0..4).map(|i| i.to_string()).collect(),
            vec![
                (0, 1, int(1)),
                (1, 2, int(1)),
                (2, 3, int(1)),
                (3, 0, int(1)),
            ],
            0,
        )
        .unwrap();
        let t = lanczos_path_weights(&g, 4).unwrap();
        assert_eq!(t.beta_sq(), &[int(2), int(2)][..]);
        assert!(t.is_terminated());

        // The induced path graph reproduces the walk moments 1,2,8,32,128.
        let m = moments_from_weights_with_cap(&t.as_level_weights(), &int(1), 4, 8).unwrap();
        assert_eq!(m.terms(), &[int(1), int(2), int(8), int(32), int(128)][..]);
        for n in 0..=4usize {
            assert_eq!(*m.term(n), matrix_power_entry(&g, 2 * n));
        }
    }

    #[test]
    fn product_ball_reduction() {
        let g = ExplicitGraph::from_product_ball(2, 8);
        let t = lanczos_path_weights(&g, 4).unwrap();
        assert_eq!(t.beta_sq(), &[int(1), int(2), rat(5, 2), rat(29, 10)][..]);
        assert!(!t.is_terminated());
    }

    #[test]
    fn depth_cap_is_enforced() {
        let g = path_graph(&[int(1)]);
        assert!(matches!(
            lanczos_path_weights_with_cap(&g, 3, 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn reduction_reproduces_moments_on_assorted_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        for case in 0..20 {
            // Random bipartite graph on at most 12 vertices with signed
            // rational weights.
            let left = rng.gen_range(1..=6usize);
            let right = rng.gen_range(1..=6usize);
            let labels = (0..left + right).map(|i| i.to_string()).collect();
            let mut edges = Vec::new();
            for i in 0..left {
                for j in 0..right {
                    if rng.gen_bool(0.6) {
                        let mut num = rng.gen_range(-3i64..=3);
                        if num == 0 {
                            num = 1;
                        }
                        edges.push((i, left + j, rat(num, rng.gen_range(1..=3))));
                    }
                }
            }
            let g = ExplicitGraph::new(labels, edges, 0).unwrap();
            let depth = 5;
            let t = lanczos_path_weights(&g, depth).unwrap();
            let source =
                closed_walk_moments_with_cap(&WalkGraph::Explicit(g.clone()), depth, 8).unwrap();
            let reduced =
                moments_from_weights_with_cap(&t.as_level_weights(), &int(1), depth, 8).unwrap();
            assert_eq!(source, reduced.terms().to_vec(), "case {case}");
            for (n, value) in source.iter().enumerate() {
                assert_eq!(
                    *value,
                    matrix_power_entry(&g, 2 * n),
                    "case {case}, n = {n}"
                );
            }
        }
    }
}
