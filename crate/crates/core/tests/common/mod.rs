//! Shared fixtures for the integration suites.
#![allow(dead_code)] // each test binary uses its own subset

use momentwalk::rational::{int, rat, Rational};
use momentwalk::{ExplicitGraph, MomentPrefix};
use rand::Rng;

pub fn catalan(len: usize) -> MomentPrefix {
    let mut c = vec![int(1)];
    for n in 1..len {
        let mut next = int(0);
        for i in 0..n {
            next += &c[i] * &c[n - 1 - i];
        }
        c.push(next);
    }
    MomentPrefix::new(c).unwrap()
}

pub fn factorials(len: usize) -> MomentPrefix {
    let mut f = vec![int(1)];
    for n in 1..len {
        let prev = f[n - 1].clone();
        f.push(prev * int(n as i64));
    }
    MomentPrefix::new(f).unwrap()
}

/// Positive rational in [1/4, 4].
pub fn rand_positive(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(1..=16), rng.gen_range(1..=16))
        .max(rat(1, 4))
        .min(int(4))
}

pub fn rand_lambda(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| rand_positive(rng)).collect()
}

pub fn four_cycle() -> ExplicitGraph {
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

/// Random bipartite graph on at most 12 vertices with signed rational
/// weights, rooted in the left class.
pub fn rand_bipartite(rng: &mut impl Rng) -> ExplicitGraph {
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
    ExplicitGraph::new(labels, edges, 0).unwrap()
}
