//! Closed walks on the ordered product graph over ℕ^k, and the bijection
//! that reads a k-tuple of non-crossing paths as one walk.
//!
//! Run with: `cargo run -p momentwalk --example walk_graph`

use momentwalk::rational::int;
use momentwalk::{
    closed_walk_moments, enumerate_noncrossing, format_rational, neighbors, phi, phi_inverse,
    LevelWeights, WalkGraph, WalkVertex,
};

fn main() -> momentwalk::Result<()> {
    // Neighbors in the ordered, parity-constrained vertex set.
    let origin = WalkVertex::root(2);
    println!("neighbors of (0,0): {:?}", coord_list(&neighbors(&origin)));
    let v = WalkVertex::new(vec![1, 1])?;
    println!("neighbors of (1,1): {:?}", coord_list(&neighbors(&v)));

    // Unit-weight walk moments at k = 2 are the 2x2 Hankel minors of the
    // Catalan numbers.
    let g = WalkGraph::product(2, LevelWeights::ones(10));
    let moments = closed_walk_moments(&g, 4)?;
    let rendered: Vec<String> = moments.iter().map(format_rational).collect();
    println!("k = 2 unit walk moments: {}", rendered.join(", "));

    // phi sends each tuple to a distinct walk and phi_inverse undoes it.
    let tuples = enumerate_noncrossing(3, 2)?;
    for t in &tuples {
        let walk = phi(t);
        assert_eq!(&phi_inverse(&walk)?, t);
    }
    println!(
        "phi round trip: exact on all {} tuples of B_3 at k = 2",
        tuples.len()
    );
    assert_eq!(moments[3], int(tuples.len() as i64));
    Ok(())
}

fn coord_list(vs: &[WalkVertex]) -> Vec<Vec<usize>> {
    vs.iter().map(|v| v.coords().to_vec()).collect()
}
