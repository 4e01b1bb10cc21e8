//! The full constructive pipeline: weights from moments, the determinant
//! transform, closed-walk enumeration, exact comparison, and the recovered
//! path-enumerability witness.
//!
//! Run with: `cargo run -p momentwalk --example verify_pipeline`

use momentwalk::rational::int;
use momentwalk::{
    format_rational, moments_from_weights, verify_theorem, LevelWeights, MomentPrefix,
};

fn main() -> momentwalk::Result<()> {
    let catalan = moments_from_weights(&LevelWeights::ones(10), &int(1), 10)?;
    report("catalan", &catalan, 2)?;

    let factorials =
        MomentPrefix::from_integers(&[1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800]);
    report("n!", &factorials, 2)?;
    report("n!", &factorials, 3)?;
    Ok(())
}

fn report(label: &str, a: &MomentPrefix, k: usize) -> momentwalk::Result<()> {
    let result = verify_theorem(a, k)?;
    println!(
        "{label}, k = {k}: {} exact matches (n = 0..={}), witness nonnegative: {}",
        result.comparisons.len(),
        result.max_compared(),
        result.witness_nonnegative
    );
    let witness: Vec<String> = result
        .witness
        .lambda()
        .iter()
        .map(format_rational)
        .collect();
    println!("  witness lambda' = ({})", witness.join(", "));
    Ok(())
}
