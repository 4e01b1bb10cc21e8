//! Reducing a bipartite graph's closed-walk moments to path-graph level
//! weights, entirely in exact rationals.
//!
//! Run with: `cargo run -p momentwalk --example lanczos_reduction`

use momentwalk::rational::int;
use momentwalk::{
    closed_walk_moments, format_rational, lanczos_path_weights, moments_from_weights_with_cap,
    ExplicitGraph, WalkGraph,
};

fn main() -> momentwalk::Result<()> {
    // The 4-cycle: walk moments 1, 2, 8, 32, 128, ... reduce to the path
    // graph with squared weights (2, 2).
    let cycle = ExplicitGraph::new(
        (0..4).map(|i| i.to_string()).collect(),
        vec![
            (0, 1, int(1)),
            (1, 2, int(1)),
            (2, 3, int(1)),
            (3, 0, int(1)),
        ],
        0,
    )?;
    let reduced = lanczos_path_weights(&cycle, 4)?;
    println!(
        "4-cycle: beta^2 = ({}), terminated = {}",
        render(reduced.beta_sq()),
        reduced.is_terminated()
    );
    let source = closed_walk_moments(&WalkGraph::Explicit(cycle), 4)?;
    let via_path = moments_from_weights_with_cap(&reduced.as_level_weights(), &int(1), 4, 8)?;
    assert_eq!(source, via_path.terms().to_vec());
    println!(
        "path graph reproduces the walk moments: {}",
        render(&source)
    );

    // The unit-weight product ball at k = 2: its reduction is the weight
    // system of the transformed Catalan sequence.
    let ball = ExplicitGraph::from_product_ball(2, 8);
    println!(
        "product ball (radius 8): {} vertices, {} edges",
        ball.vertex_count(),
        ball.edges().len()
    );
    let reduced = lanczos_path_weights(&ball, 4)?;
    println!("its reduction: beta^2 = ({})", render(reduced.beta_sq()));
    Ok(())
}

fn render(values: &[momentwalk::Rational]) -> String {
    values
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(", ")
}
