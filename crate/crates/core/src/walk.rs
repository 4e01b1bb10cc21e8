//! Closed-walk enumeration on vertex-ordered product graphs over ℕ^k and on
//! user-supplied explicit graphs.
//!
//! The product graph has vertices `0 ≤ x_1 ≤ ... ≤ x_k` of equal parity and
//! edges between vertices differing by `{-1, +1}^k`. Its closed walks from
//! the origin are exactly the non-crossing k-tuples of Dyck paths, read one
//! lattice column at a time.
//!
//! Directed weighting: the whole level factor `λ` is charged to upward
//! coordinate moves and downward moves carry weight 1. Along any closed walk
//! each coordinate's trajectory is itself a Dyck path, so its up and down
//! moves pair per level and the walk's weight equals the symmetric per-step
//! weighting of the underlying paths.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::{One, Zero};

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tuples::PathTuple;
use crate::weights::LevelWeights;

/// Cap on the half-length of walk enumeration DPs.
pub const DEFAULT_WALK_CAP: usize = 8;

/// A vertex of the product graph: coordinates sorted ascending, all of one
/// parity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WalkVertex {
    coords: Vec<usize>,
}

impl WalkVertex {
    pub fn new(coords: Vec<usize>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidVertex);
        }
        if coords.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidVertex);
        }
        let parity = coords[0] % 2;
        if coords.iter().any(|c| c % 2 != parity) {
            return Err(Error::InvalidVertex);
        }
        Ok(Self { coords })
    }

    /// The origin of the k-dimensional product graph.
    pub fn root(k: usize) -> Self {
        assert!(k >= 1, "dimension must be positive");
        Self { coords: vec![0; k] }
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn is_root(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn top(&self) -> usize {
        *self.coords.last().unwrap()
    }
}

/// All product-graph neighbors of `v`: offsets in `{-1,+1}^k` whose result
/// stays nonnegative and sorted. Returned in ascending order.
pub fn neighbors(v: &WalkVertex) -> Vec<WalkVertex> {
    let k = v.dimension();
    let mut out = Vec::new();
    'mask: for mask in 0..(1usize << k) {
        let mut coords = Vec::with_capacity(k);
        for (j, &c) in v.coords.iter().enumerate() {
            let up = mask & (1 << (k - 1 - j)) != 0;
            if up {
                coords.push(c + 1);
            } else {
                if c == 0 {
                    continue 'mask;
                }
                coords.push(c - 1);
            }
        }
        if coords.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        out.push(WalkVertex { coords });
    }
    out
}

/// Weight of the directed move `u -> v`: the product over coordinates that
/// move up to `x_j` of `λ_{x_j + 2j - 2}` (1-based `j`); downward coordinate
/// moves contribute 1.
pub fn edge_weight_directed(u: &WalkVertex, v: &WalkVertex, lw: &LevelWeights) -> Result<Rational> {
    if u.dimension() != v.dimension() {
        return Err(Error::NotAdjacent);
    }
    let mut acc = Rational::one();
    for (j, (&cu, &cv)) in u.coords.iter().zip(&v.coords).enumerate() {
        if cv == cu + 1 {
            let level = cv + 2 * j;
            acc *= lw.level(level).ok_or(Error::InsufficientWeights {
                required: level,
                available: lw.len(),
            })?;
        } else if cu != cv + 1 {
            return Err(Error::NotAdjacent);
        }
    }
    Ok(acc)
}

/// A finite undirected graph with symmetric rational edge weights and a
/// distinguished root. Bipartiteness of the root's component is verified by
/// 2-coloring at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    labels: Vec<String>,
    edges: Vec<(usize, usize, Rational)>,
    adj: Vec<Vec<(usize, Rational)>>,
    root: usize,
}

impl ExplicitGraph {
    pub fn new(
        labels: Vec<String>,
        edges: Vec<(usize, usize, Rational)>,
        root: usize,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidInput("graph must have a vertex".into()));
        }
        if root >= n {
            return Err(Error::InvalidInput(format!(
                "root {root} out of range for {n} vertices"
            )));
        }
        let mut adj: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut canonical = Vec::with_capacity(edges.len());
        for (i, j, w) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({i},{j}) out of range for {n} vertices"
                )));
            }
            if i == j {
                // A self-loop is an odd cycle.
                return Err(Error::NotBipartite);
            }
            let key = (i.min(j), i.max(j));
            if seen.insert(key, ()).is_some() {
                return Err(Error::InvalidInput(format!("duplicate edge ({i},{j})")));
            }
            adj[i].push((j, w.clone()));
            adj[j].push((i, w.clone()));
            canonical.push((key.0, key.1, w));
        }
        let graph = Self {
            labels,
            edges: canonical,
            adj,
            root,
        };
        graph.check_bipartite()?;
        Ok(graph)
    }

    /// 2-color the component reachable from the root.
    fn check_bipartite(&self) -> Result<()> {
        let mut color: Vec<Option<bool>> = vec![None; self.adj.len()];
        color[self.root] = Some(false);
        let mut queue = VecDeque::from([self.root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for (v, _) in &self.adj[u] {
                match color[*v] {
                    None => {
                        color[*v] = Some(!cu);
                        queue.push_back(*v);
                    }
                    Some(cv) if cv == cu => return Err(Error::NotBipartite),
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }

    /// Materialize the unit-weight product graph restricted to the ball
    /// `x_k ≤ radius`. Walk moments of the ball agree with the full graph up
    /// to half-length `radius`, and Lanczos runs on it agree up to depth
    /// `radius - 1`.
    pub fn from_product_ball(k: usize, radius: usize) -> Self {
        let root = WalkVertex::root(k);
        let mut index: BTreeMap<WalkVertex, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([root.clone()]);
        index.insert(root, 0);
        let mut discovered = vec![];
        while let Some(u) = queue.pop_front() {
            discovered.push(u.clone());
            for v in neighbors(&u) {
                if v.top() > radius || index.contains_key(&v) {
                    continue;
                }
                index.insert(v.clone(), 0);
                queue.push_back(v);
            }
        }
        let mut vertices: Vec<WalkVertex> = index.keys().cloned().collect();
        vertices.sort();
        let index: HashMap<WalkVertex, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let labels = vertices
            .iter()
            .map(|v| {
                v.coords()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        let mut edges = Vec::new();
        for (i, u) in vertices.iter().enumerate() {
            for v in neighbors(u) {
                if let Some(&j) = index.get(&v) {
                    if i < j {
                        edges.push((i, j, Rational::one()));
                    }
                }
            }
        }
        let root = index[&WalkVertex::root(k)];
        Self::new(labels, edges, root).expect("product ball is bipartite by parity")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize, Rational)] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// `y = A x` for the symmetric weighted adjacency operator.
    pub(crate) fn apply_adjacency(&self, x: &[Rational]) -> Vec<Rational> {
        let mut y = vec![Rational::zero(); x.len()];
        for (u, xu) in x.iter().enumerate() {
            if xu.is_zero() {
                continue;
            }
            for (v, w) in &self.adj[u] {
                y[*v] += xu * w;
            }
        }
        y
    }
}

/// A locally finite, vertex-ordered walk graph: either the lazily generated
/// product graph with directed level weights, or an explicit finite graph
/// with symmetric weights.
#[derive(Debug, Clone)]
pub enum WalkGraph {
    Product { k: usize, weights: LevelWeights },
    Explicit(ExplicitGraph),
}

impl WalkGraph {
    pub fn product(k: usize, weights: LevelWeights) -> Self {
        assert!(k >= 1, "dimension must be positive");
        WalkGraph::Product { k, weights }
    }
}

/// Weighted sums of closed root-to-root walks, one entry per length
/// `0..=max_len`. Odd entries are exactly zero on these bipartite graphs.
pub fn walk_return_sums(g: &WalkGraph, max_len: usize) -> Result<Vec<Rational>> {
    match g {
        WalkGraph::Product { k, weights } => product_return_sums(*k, weights, max_len),
        WalkGraph::Explicit(graph) => Ok(explicit_return_sums(graph, max_len)),
    }
}

fn product_return_sums(k: usize, lw: &LevelWeights, max_len: usize) -> Result<Vec<Rational>> {
    // A walk of length L returning to the origin keeps every coordinate at
    // or below L/2, so the DP is confined to that ball and the largest level
    // it can touch is L/2 + 2k - 2.
    let bound = max_len / 2;
    if bound > 0 && !lw.is_terminated() {
        let required = bound + 2 * k - 2;
        if lw.len() < required {
            return Err(Error::InsufficientWeights {
                required,
                available: lw.len(),
            });
        }
    }
    let root = WalkVertex::root(k);
    let mut frontier: BTreeMap<WalkVertex, Rational> = BTreeMap::new();
    frontier.insert(root.clone(), Rational::one());
    let mut out = Vec::with_capacity(max_len + 1);
    out.push(Rational::one());
    for _ in 1..=max_len {
        let mut next: BTreeMap<WalkVertex, Rational> = BTreeMap::new();
        for (u, value) in &frontier {
            for v in neighbors(u) {
                if v.top() > bound {
                    continue;
                }
                let w = edge_weight_directed(u, &v, lw)?;
                *next.entry(v).or_insert_with(Rational::zero) += w * value;
            }
        }
        frontier = next;
        out.push(frontier.get(&root).cloned().unwrap_or_else(Rational::zero));
    }
    Ok(out)
}

fn explicit_return_sums(g: &ExplicitGraph, max_len: usize) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); g.vertex_count()];
    x[g.root()] = Rational::one();
    let mut out = Vec::with_capacity(max_len + 1);
    out.push(Rational::one());
    for _ in 1..=max_len {
        x = g.apply_adjacency(&x);
        out.push(x[g.root()].clone());
    }
    out
}

/// Closed-walk moments `b_0..b_{n_max}`: the weighted count of length-`2n`
/// closed walks from the root.
pub fn closed_walk_moments(g: &WalkGraph, n_max: usize) -> Result<Vec<Rational>> {
    closed_walk_moments_with_cap(g, n_max, DEFAULT_WALK_CAP)
}

pub fn closed_walk_moments_with_cap(
    g: &WalkGraph,
    n_max: usize,
    cap: usize,
) -> Result<Vec<Rational>> {
    if n_max > cap {
        return Err(Error::CapExceeded {
            what: "walk half-length",
            requested: n_max,
            cap,
        });
    }
    let sums = walk_return_sums(g, 2 * n_max)?;
    Ok(sums.into_iter().step_by(2).collect())
}

/// The single moment `b_n`.
pub fn closed_walk_sum(g: &WalkGraph, n: usize) -> Result<Rational> {
    closed_walk_sum_with_cap(g, n, DEFAULT_WALK_CAP)
}

pub fn closed_walk_sum_with_cap(g: &WalkGraph, n: usize, cap: usize) -> Result<Rational> {
    Ok(closed_walk_moments_with_cap(g, n, cap)?.pop().unwrap())
}

/// A closed root-to-root walk on the product graph, stored as its vertex
/// sequence. Adjacency and endpoints are validated by [`phi_inverse`], so
/// hand-built invalid walks are representable and rejected there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    vertices: Vec<WalkVertex>,
}

impl ClosedWalk {
    pub fn from_vertices(vertices: Vec<WalkVertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidWalk("walk must contain a vertex".into()));
        }
        let k = vertices[0].dimension();
        if vertices.iter().any(|v| v.dimension() != k) {
            return Err(Error::InvalidWalk(
                "vertices must share one dimension".into(),
            ));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[WalkVertex] {
        &self.vertices
    }

    pub fn dimension(&self) -> usize {
        self.vertices[0].dimension()
    }

    /// Walk length (number of edges).
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Read a non-crossing tuple as one closed walk: vertex `i` collects the
/// heights of all k paths at index `i`.
pub fn phi(t: &PathTuple) -> ClosedWalk {
    let heights: Vec<Vec<usize>> = t.paths().iter().map(DyckPath::heights).collect();
    let len = 2 * t.half_length();
    let vertices = (0..=len)
        .map(|i| WalkVertex {
            coords: heights.iter().map(|h| h[i]).collect(),
        })
        .collect();
    ClosedWalk { vertices }
}

/// Invert [`phi`]: split the walk into per-coordinate height sequences and
/// rebuild the paths. Fails with `InvalidWalk` when the endpoints are not the
/// root or consecutive vertices are not adjacent.
pub fn phi_inverse(walk: &ClosedWalk) -> Result<PathTuple> {
    let vs = walk.vertices();
    if !vs[0].is_root() || !vs[vs.len() - 1].is_root() {
        return Err(Error::InvalidWalk(
            "walk must start and end at the root".into(),
        ));
    }
    if !walk.len().is_multiple_of(2) {
        return Err(Error::InvalidWalk("closed walks have even length".into()));
    }
    for pair in vs.windows(2) {
        let diff_ok = pair[0]
            .coords()
            .iter()
            .zip(pair[1].coords())
            .all(|(&a, &b)| a.abs_diff(b) == 1);
        if !diff_ok {
            return Err(Error::InvalidWalk(format!(
                "vertices {:?} and {:?} are not adjacent",
                pair[0].coords(),
                pair[1].coords()
            )));
        }
    }
    let k = walk.dimension();
    let mut paths = Vec::with_capacity(k);
    for j in 0..k {
        let steps = vs
            .windows(2)
            .map(|pair| {
                if pair[1].coords()[j] > pair[0].coords()[j] {
                    Step::Up
                } else {
                    Step::Down
                }
            })
            .collect();
        paths.push(DyckPath::new(steps).expect("coordinate trajectories are Dyck paths"));
    }
    PathTuple::new(paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::tuples::enumerate_noncrossing;
    use crate::weights::path_weight;
    use rand::{Rng, SeedableRng};

    fn vertex(coords: &[usize]) -> WalkVertex {
        WalkVertex::new(coords.to_vec()).unwrap()
    }

    fn four_cycle() -> ExplicitGraph {
        ExplicitGraph::new(
            (0..4).map(|i| i.to_string()).collect(),
            vec![
                (0, 1, int(1)),
                (1, 2, int(1)),
                (2, 3, int(1)),
                (3, 0, int(1)),
            ],
            0,
        )
        .unwrap()
    }

    #[test]
    fn vertex_invariants() {
        assert!(WalkVertex::new(vec![0, 0]).is_ok());
        assert!(WalkVertex::new(vec![1, 3, 5]).is_ok());
        assert!(WalkVertex::new(vec![2, 1]).is_err());
        assert!(WalkVertex::new(vec![1, 2]).is_err());
        assert!(WalkVertex::new(vec![]).is_err());
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(&vertex(&[0, 0])), vec![vertex(&[1, 1])]);
        assert_eq!(
            neighbors(&vertex(&[1, 1])),
            vec![vertex(&[0, 0]), vertex(&[0, 2]), vertex(&[2, 2])]
        );
        assert_eq!(
            neighbors(&vertex(&[2, 2])),
            vec![vertex(&[1, 1]), vertex(&[1, 3]), vertex(&[3, 3])]
        );
    }

    #[test]
    fn directed_weight_examples() {
        let lw = LevelWeights::new((1..=6).map(int).collect(), false);
        // Both coordinates rise to 1: levels 1 and 3.
        assert_eq!(
            edge_weight_directed(&vertex(&[0, 0]), &vertex(&[1, 1]), &lw).unwrap(),
            int(1) * int(3)
        );
        // First coordinate falls, second rises to 2: level 4 only.
        assert_eq!(
            edge_weight_directed(&vertex(&[1, 1]), &vertex(&[0, 2]), &lw).unwrap(),
            int(4)
        );
        let ones = LevelWeights::ones(6);
        assert_eq!(
            edge_weight_directed(&vertex(&[1, 1]), &vertex(&[2, 2]), &ones).unwrap(),
            int(1)
        );
        assert_eq!(
            edge_weight_directed(&vertex(&[0, 0]), &vertex(&[2, 2]), &ones),
            Err(Error::NotAdjacent)
        );
    }

    #[test]
    fn product_walks_unit_weights_match_catalan_transform() {
        let g = WalkGraph::product(2, LevelWeights::ones(10));
        let m = closed_walk_moments(&g, 4).unwrap();
        assert_eq!(m, vec![int(1), int(1), int(3), int(14), int(84)]);
    }

    #[test]
    fn product_walks_dimension_one_are_catalan() {
        let g = WalkGraph::product(1, LevelWeights::ones(8));
        let m = closed_walk_moments(&g, 5).unwrap();
        assert_eq!(m, vec![int(1), int(1), int(2), int(5), int(14), int(42)]);
    }

    #[test]
    fn four_cycle_walk_moments() {
        let g = WalkGraph::Explicit(four_cycle());
        let m = closed_walk_moments(&g, 3).unwrap();
        assert_eq!(m, vec![int(1), int(2), int(8), int(32)]);
    }

    #[test]
    fn odd_length_return_sums_vanish() {
        let graphs = [
            WalkGraph::product(
                2,
                LevelWeights::new(
                    vec![rat(1, 2), int(3), int(1), int(2), int(1), int(1)],
                    false,
                ),
            ),
            WalkGraph::Explicit(four_cycle()),
        ];
        for g in &graphs {
            let sums = walk_return_sums(g, 8).unwrap();
            for (len, value) in sums.iter().enumerate() {
                if len % 2 == 1 {
                    assert!(value.is_zero(), "length {len}");
                }
            }
        }
    }

    #[test]
    fn walk_cap_is_enforced() {
        let g = WalkGraph::product(2, LevelWeights::ones(30));
        assert!(matches!(
            closed_walk_moments(&g, 9),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn phi_reads_heights() {
        let t = PathTuple::new(vec![
            DyckPath::parse("UD").unwrap(),
            DyckPath::parse("UD").unwrap(),
        ])
        .unwrap();
        let walk = phi(&t);
        assert_eq!(
            walk.vertices(),
            &[vertex(&[0, 0]), vertex(&[1, 1]), vertex(&[0, 0])]
        );

        let t = PathTuple::new(vec![
            DyckPath::parse("UDUD").unwrap(),
            DyckPath::parse("UUDD").unwrap(),
        ])
        .unwrap();
        let walk = phi(&t);
        assert_eq!(
            walk.vertices(),
            &[
                vertex(&[0, 0]),
                vertex(&[1, 1]),
                vertex(&[0, 2]),
                vertex(&[1, 1]),
                vertex(&[0, 0])
            ]
        );

        // At k = 1 the walk is the path's own height sequence.
        let p = DyckPath::parse("UUDUDD").unwrap();
        let t = PathTuple::new(vec![p.clone()]).unwrap();
        let walk = phi(&t);
        let heights: Vec<WalkVertex> = p.heights().into_iter().map(|h| vertex(&[h])).collect();
        assert_eq!(walk.vertices(), &heights[..]);
        assert_eq!(phi_inverse(&walk).unwrap(), t);
    }

    #[test]
    fn phi_bijects_tuples_with_walks() {
        for k in 2..=3usize {
            for n in 0..=4usize {
                let tuples = enumerate_noncrossing(n, k).unwrap();
                let mut images = std::collections::HashSet::new();
                for t in &tuples {
                    let walk = phi(t);
                    assert_eq!(phi_inverse(&walk).unwrap(), *t);
                    images.insert(walk.vertices().to_vec());
                }
                assert_eq!(images.len(), tuples.len());
                // Image count equals the unit-weight walk count.
                let g = WalkGraph::product(k, LevelWeights::ones(n + 2 * k));
                let count = closed_walk_sum(&g, n).unwrap();
                assert_eq!(count, int(tuples.len() as i64));
            }
        }
    }

    #[test]
    fn phi_inverse_rejects_invalid_walks() {
        let walk =
            ClosedWalk::from_vertices(vec![vertex(&[0, 0]), vertex(&[2, 2]), vertex(&[0, 0])])
                .unwrap();
        assert!(matches!(phi_inverse(&walk), Err(Error::InvalidWalk(_))));

        let walk = ClosedWalk::from_vertices(vec![vertex(&[0, 0]), vertex(&[1, 1])]).unwrap();
        assert!(matches!(phi_inverse(&walk), Err(Error::InvalidWalk(_))));
    }

    #[test]
    fn weight_transport_along_phi() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(51);
        for k in 2..=3usize {
            for n in 1..=3usize {
                let lambda: Vec<Rational> = (0..(n + 2 * k))
                    .map(|_| rat(rng.gen_range(1..=9), rng.gen_range(1..=5)))
                    .collect();
                let lw = LevelWeights::new(lambda, false);
                for t in enumerate_noncrossing(n, k).unwrap() {
                    let mut tuple_weight = Rational::one();
                    for (j, p) in t.paths().iter().enumerate() {
                        tuple_weight *= path_weight(p, &lw, 2 * j).unwrap();
                    }
                    let walk = phi(&t);
                    let mut walk_weight = Rational::one();
                    for pair in walk.vertices().windows(2) {
                        walk_weight *= edge_weight_directed(&pair[0], &pair[1], &lw).unwrap();
                    }
                    assert_eq!(tuple_weight, walk_weight);
                }
            }
        }
    }

    #[test]
    fn walk_sums_match_ground_tuple_sums() {
        // The walk moments are the ground-form tuple sums with shifted
        // weights; the lifted sum differs by the constant padding factor.
        use crate::tuples::lgv_sum;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(61);
        for k in 1..=3usize {
            for n in 0..=3usize {
                let lambda: Vec<Rational> = (0..(n + 2 * k))
                    .map(|_| rat(rng.gen_range(1..=9), rng.gen_range(1..=5)))
                    .collect();
                let lw = LevelWeights::new(lambda, false);
                let g = WalkGraph::product(k, lw.clone());
                let walk = closed_walk_sum(&g, n).unwrap();

                let mut ground = Rational::zero();
                for t in enumerate_noncrossing(n, k).unwrap() {
                    let mut product = Rational::one();
                    for (j, p) in t.paths().iter().enumerate() {
                        product *= path_weight(p, &lw, 2 * j).unwrap();
                    }
                    ground += product;
                }
                assert_eq!(walk, ground);

                let mut padding = Rational::one();
                for j in 1..k {
                    for h in 1..=(2 * j) {
                        padding *= lw.level(h).unwrap();
                    }
                }
                assert_eq!(lgv_sum(&int(1), &lw, k, n).unwrap(), padding * walk);
            }
        }
    }

    #[test]
    fn explicit_graph_validation() {
        let bad_root = ExplicitGraph::new(vec!["a".into()], vec![], 1);
        assert!(matches!(bad_root, Err(Error::InvalidInput(_))));

        let triangle = ExplicitGraph::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1, int(1)), (1, 2, int(1)), (2, 0, int(1))],
            0,
        );
        assert_eq!(triangle, Err(Error::NotBipartite));

        let self_loop = ExplicitGraph::new(vec!["a".into()], vec![(0, 0, int(1))], 0);
        assert_eq!(self_loop, Err(Error::NotBipartite));

        let dup = ExplicitGraph::new(
            vec!["a".into(), "b".into()],
            vec![(0, 1, int(1)), (1, 0, int(2))],
            0,
        );
        assert!(matches!(dup, Err(Error::InvalidInput(_))));

        // An odd cycle unreachable from the root is tolerated: only the
        // root's component must 2-color.
        let detached = ExplicitGraph::new(
            (0..5).map(|i| i.to_string()).collect(),
            vec![
                (0, 1, int(1)),
                (2, 3, int(1)),
                (3, 4, int(1)),
                (4, 2, int(1)),
            ],
            0,
        );
        assert!(detached.is_ok());
    }

    #[test]
    fn product_ball_matches_lazy_product_graph() {
        let ball = WalkGraph::Explicit(ExplicitGraph::from_product_ball(2, 8));
        let lazy = WalkGraph::product(2, LevelWeights::ones(12));
        assert_eq!(
            closed_walk_moments(&ball, 4).unwrap(),
            closed_walk_moments(&lazy, 4).unwrap()
        );
    }
}
