//! Weighted Dyck paths and the moments they enumerate.
//!
//! Run with: `cargo run -p momentwalk --example dyck_moments`

use momentwalk::rational::{int, Rational};
use momentwalk::{
    enumerate_dyck, format_rational, moments_from_weights, path_weight, DyckPath, LevelWeights,
};
use num_traits::Zero;

fn main() -> momentwalk::Result<()> {
    // The five Dyck paths of length 6.
    let paths = enumerate_dyck(3)?;
    println!("D_3 ({} paths):", paths.len());
    for p in &paths {
        println!("  {}", p.step_string());
    }

    // Staircase weights 1,1,2,2,3,3 turn path sums into factorials.
    let staircase = LevelWeights::new(vec![int(1), int(1), int(2), int(2), int(3), int(3)], false);
    let moments = moments_from_weights(&staircase, &int(1), 6)?;
    let rendered: Vec<String> = moments.terms().iter().map(format_rational).collect();
    println!("staircase moments: {}", rendered.join(", "));

    // The DP above agrees with the explicit sum over paths.
    let mut brute = Rational::zero();
    for p in enumerate_dyck(4)? {
        brute += path_weight(&p, &staircase, 0)?;
    }
    assert_eq!(&brute, moments.term(4));
    println!("enumeration check at n = 4: {}", format_rational(&brute));

    // Shifting a path's levels by 2 evaluates it against the system seen
    // from one baseline up.
    let p = DyckPath::parse("UUDD")?;
    println!(
        "weight of UUDD at shift 2: {}",
        format_rational(&path_weight(&p, &staircase, 2)?)
    );
    Ok(())
}
