//! Non-crossing path tuples and the two routes to the same determinant:
//! enumerate lifted tuples, or take k×k Hankel minors of the moments.
//!
//! Run with: `cargo run -p momentwalk --example noncrossing_lgv`

use momentwalk::rational::int;
use momentwalk::{
    drop_tuple, enumerate_noncrossing, format_rational, hankel_transform, lgv_sum, lift_tuple,
    moments_from_weights, LevelWeights,
};

fn main() -> momentwalk::Result<()> {
    // The three non-crossing pairs over Dyck paths of length 4.
    let pairs = enumerate_noncrossing(2, 2)?;
    println!("B_2 at k = 2 ({} tuples):", pairs.len());
    for t in &pairs {
        let strings: Vec<String> = t.paths().iter().map(|p| p.step_string()).collect();
        println!("  ({})", strings.join(", "));
    }

    // Lifting separates the paths into vertex-disjoint shifted copies, and
    // dropping undoes it exactly.
    for t in &pairs {
        let lifted = lift_tuple(t);
        assert!(lifted.is_vertex_disjoint());
        assert_eq!(&drop_tuple(&lifted)?, t);
    }
    println!("lift/drop round trip: exact on all of B_2");

    // Enumeration route vs determinant route, on the factorial staircase.
    let staircase = LevelWeights::new(
        vec![
            int(1),
            int(1),
            int(2),
            int(2),
            int(3),
            int(3),
            int(4),
            int(4),
        ],
        false,
    );
    let moments = moments_from_weights(&staircase, &int(1), 8)?;
    let transformed = hankel_transform(&moments, 2)?;
    for n in 0..=3 {
        let by_tuples = lgv_sum(&int(1), &staircase, 2, n)?;
        let by_determinants = transformed.term(n).clone();
        assert_eq!(by_tuples, by_determinants);
        println!(
            "n = {n}: tuple sum = determinant = {}",
            format_rational(&by_tuples)
        );
    }
    Ok(())
}
