//! Recovering level weights from a moment prefix, including termination and
//! inconsistency.
//!
//! Run with: `cargo run -p momentwalk --example weight_extraction`

use momentwalk::{
    format_rational, weights_from_moments, LevelWeights, MomentPrefix, WeightExtraction,
};

fn show(label: &str, outcome: &WeightExtraction) {
    match outcome {
        WeightExtraction::Weights(w) => {
            let rendered: Vec<String> = w.lambda().iter().map(format_rational).collect();
            println!(
                "{label}: lambda = ({}){}",
                rendered.join(", "),
                if w.is_terminated() {
                    ", terminated"
                } else {
                    ""
                }
            );
        }
        WeightExtraction::Inconsistent { index } => {
            println!("{label}: inconsistent at index {index}");
        }
    }
}

fn main() -> momentwalk::Result<()> {
    // Factorials: the classical continued-fraction coefficients 1,1,2,2,...
    let factorials = MomentPrefix::from_integers(&[1, 1, 2, 6, 24, 120, 720, 5040, 40320]);
    show("n!", &weights_from_moments(&factorials)?);

    // Powers of one weight terminate after a single level.
    let geometric = MomentPrefix::from_integers(&[1, 3, 9, 27, 81]);
    show("3^n", &weights_from_moments(&geometric)?);

    // Termination implies the tail; a disagreeing tail is detected.
    let broken = MomentPrefix::from_integers(&[1, 1, 1, 2]);
    show("(1,1,1,2)", &weights_from_moments(&broken)?);

    // Round trip: moments of the recovered system reproduce the input.
    let lw = LevelWeights::new(vec![momentwalk::rational::rat(2, 1)], true);
    let moments = momentwalk::moments_from_weights(&lw, &momentwalk::rational::int(1), 6)?;
    match weights_from_moments(&moments)? {
        WeightExtraction::Weights(w) => assert_eq!(w, lw),
        other => unreachable!("round trip failed: {other:?}"),
    }
    println!("round trip on a terminated system: exact");
    Ok(())
}
