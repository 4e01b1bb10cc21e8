//! Exact Stieltjes-moment consistency checks with rational witnesses.
//!
//! Run with: `cargo run -p momentwalk --example sm_check`

use momentwalk::{
    format_rational, quadratic_form, sm_check, MomentPrefix, SmRefutation, SmVerdict,
};

fn main() {
    let catalan = MomentPrefix::from_integers(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    match sm_check(&catalan) {
        SmVerdict::ConsistentAtDepth { unshifted, shifted } => {
            println!(
                "catalan prefix: consistent (H at size {unshifted}, shifted H at size {shifted})"
            );
        }
        SmVerdict::Refuted(_) => unreachable!("catalan numbers are a moment sequence"),
    }

    // A sequence that is log-convex-looking but not a moment sequence: the
    // 2x2 Hankel block [[1,2],[2,1]] has determinant -3, and the check
    // produces a direction of negativity.
    let bad = MomentPrefix::from_integers(&[1, 2, 1, 2]);
    match sm_check(&bad) {
        SmVerdict::Refuted(SmRefutation::NotPsd {
            shift,
            matrix,
            witness,
            value,
        }) => {
            let v: Vec<String> = witness.iter().map(format_rational).collect();
            println!(
                "(1,2,1,2): refuted at shift {shift}, witness v = ({}) with v^T H v = {}",
                v.join(", "),
                format_rational(&value)
            );
            assert_eq!(quadratic_form(&matrix, &witness), value);
        }
        other => unreachable!("expected a PSD refutation, got {other:?}"),
    }

    // A zero leading term forces the whole sequence to vanish; finite PSD
    // checks alone cannot see this, so it is refuted by rule.
    let zero_led = MomentPrefix::from_integers(&[0, 0, 0, 0, 1]);
    match sm_check(&zero_led) {
        SmVerdict::Refuted(SmRefutation::NonzeroWithZeroLeading { index }) => {
            println!("(0,0,0,0,1): refuted, a_0 = 0 but a_{index} != 0");
        }
        other => unreachable!("expected the zero-leading rule, got {other:?}"),
    }
}
