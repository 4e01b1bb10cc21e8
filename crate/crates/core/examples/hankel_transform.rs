//! The Hankel determinant transform on two classical sequences.
//!
//! Run with: `cargo run -p momentwalk --example hankel_transform`

use momentwalk::rational::int;
use momentwalk::{
    format_rational, hankel_transform, iterate_l2, moments_from_weights, LevelWeights, MomentPrefix,
};

fn show(label: &str, prefix: &MomentPrefix) {
    let rendered: Vec<String> = prefix.terms().iter().map(format_rational).collect();
    println!("{label}: {}", rendered.join(", "));
}

fn main() -> momentwalk::Result<()> {
    // Catalan numbers from unit level weights.
    let catalan = moments_from_weights(&LevelWeights::ones(10), &int(1), 10)?;
    show("catalan", &catalan);

    // Their 2x2 Hankel determinants: 1, 1, 3, 14, 84, 594, 4719, ...
    let transformed = hankel_transform(&catalan, 2)?;
    show("L2(catalan)", &transformed);

    // k = 1 is the identity.
    assert_eq!(hankel_transform(&catalan, 1)?, catalan);

    // Factorials, and two rounds of the k = 2 transform: every iterate of a
    // moment sequence stays entrywise positive.
    let factorials = MomentPrefix::from_integers(&[1, 1, 2, 6, 24, 120, 720, 5040, 40320]);
    show("n!", &factorials);
    let twice = iterate_l2(&factorials, 2)?;
    show("L2(L2(n!))", &twice);

    Ok(())
}
