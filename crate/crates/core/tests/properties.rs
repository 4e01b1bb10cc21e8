//! Property tests for the crate's structural identities.

mod common;

use momentwalk::rational::{int, rat, Rational};
use momentwalk::{
    det_exact, drop_tuple, enumerate_dyck, enumerate_noncrossing, hankel_matrix, hankel_transform,
    lift_tuple, moments_from_weights, path_weight, psd_check, quadratic_form, walk_return_sums,
    weights_from_moments, LevelWeights, MomentPrefix, PsdVerdict, SymMatrix, WalkGraph,
    WeightExtraction,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

#[allow(clippy::needless_range_loop)]
fn symmetric_matrix(max_size: usize) -> impl Strategy<Value = SymMatrix> {
    (1..=max_size).prop_flat_map(|n| {
        proptest::collection::vec(small_rational(), n * (n + 1) / 2).prop_map(move |upper| {
            let mut rows = vec![vec![Rational::zero(); n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i..n {
                    let v = it.next().unwrap();
                    rows[i][j] = v.clone();
                    rows[j][i] = v;
                }
            }
            SymMatrix::from_rows(rows).unwrap()
        })
    })
}

/// Cofactor-expansion determinant, the independent oracle.
fn det_cofactor(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Rational::zero();
    for (j, head) in rows[0].iter().enumerate() {
        if head.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = head * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_matches_cofactor_expansion(m in symmetric_matrix(5)) {
        prop_assert_eq!(det_exact(&m), det_cofactor(m.rows()));
    }

    #[test]
    fn psd_verdicts_are_coherent(m in symmetric_matrix(4), probes in proptest::collection::vec(proptest::collection::vec(small_rational(), 4), 16)) {
        match psd_check(&m) {
            PsdVerdict::NotPsd { witness } => {
                prop_assert!(quadratic_form(&m, &witness).is_negative());
            }
            PsdVerdict::Psd => {
                for probe in &probes {
                    let v = &probe[..m.size()];
                    prop_assert!(!quadratic_form(&m, v).is_negative());
                }
            }
        }
    }

    #[test]
    fn transform_unrolls_to_shifted_determinants(
        terms in proptest::collection::vec(small_rational(), 5..=9),
        k in 1usize..=3,
    ) {
        let a = MomentPrefix::new(terms).unwrap();
        if a.len() >= 2 * k - 1 {
            let out = hankel_transform(&a, k).unwrap();
            for n in 0..out.len() {
                let shifted = a.shift(n).unwrap();
                let direct = det_exact(&hankel_matrix(&shifted, 0, k).unwrap());
                prop_assert_eq!(out.term(n), &direct);
            }
        }
    }

    #[test]
    fn dp_moments_equal_enumeration(
        lambda in proptest::collection::vec(small_rational(), 1..=5),
    ) {
        let n_max = lambda.len();
        let lw = LevelWeights::new(lambda, false);
        let dp = moments_from_weights(&lw, &int(1), n_max).unwrap();
        for n in 0..=n_max {
            let mut brute = Rational::zero();
            for p in enumerate_dyck(n).unwrap() {
                brute += path_weight(&p, &lw, 0).unwrap();
            }
            prop_assert_eq!(dp.term(n), &brute);
        }
    }

    #[test]
    fn weights_roundtrip_through_moments(
        lambda in proptest::collection::vec(positive_rational(), 1..=4),
    ) {
        let lw = LevelWeights::new(lambda.clone(), true);
        let moments = moments_from_weights(&lw, &int(1), 2 * lambda.len()).unwrap();
        match weights_from_moments(&moments).unwrap() {
            WeightExtraction::Weights(w) => prop_assert_eq!(w.lambda(), &lambda[..]),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn lift_then_drop_is_identity(n in 0usize..=3, k in 1usize..=3, pick in any::<prop::sample::Index>()) {
        let tuples = enumerate_noncrossing(n, k).unwrap();
        let t = &tuples[pick.index(tuples.len())];
        let lifted = lift_tuple(t);
        prop_assert!(lifted.is_vertex_disjoint());
        prop_assert_eq!(&drop_tuple(&lifted).unwrap(), t);
    }

    #[test]
    fn odd_walk_sums_vanish_on_product_graphs(
        k in 1usize..=3,
        lambda in proptest::collection::vec(small_rational(), 8),
    ) {
        let g = WalkGraph::product(k, LevelWeights::new(lambda, true));
        let sums = walk_return_sums(&g, 7).unwrap();
        for (len, value) in sums.iter().enumerate() {
            if len % 2 == 1 {
                prop_assert!(value.is_zero());
            }
        }
    }
}

#[test]
fn transformed_prefixes_of_consistent_sequences_stay_nonnegative() {
    use momentwalk::sm_check;
    for a in [common::catalan(9), common::factorials(9)] {
        let depth = sm_check(&a).depth().unwrap();
        for k in 1..=depth {
            let out = hankel_transform(&a, k).unwrap();
            assert!(out.terms().iter().all(|t| !t.is_negative()));
        }
    }
}
