//! Cross-checks every counting route against a brute-force enumerator that
//! shares no code with the engine: it generates raw column sequences by
//! recursion over the materialized steps and nothing else.

use num_bigint::BigUint;
use proptest::prelude::*;

use aligncount::engine::{
    compositions_with_parts, count, count_multinomial, count_with_parts, enumerate, Sampler,
};
use aligncount::genfunc::series_coefficients;
use aligncount::step::{is_alignment, BaseSet, LengthTuple, StepSet, StepVector};
use aligncount::ValidatedStepSet;

/// All column sequences summing to `lengths`, generated independently of the
/// engine (no tables, no memoization).
fn brute_sequences(steps: &[Vec<u32>], lengths: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn go(
        steps: &[Vec<u32>],
        residual: &mut Vec<u32>,
        prefix: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if residual.iter().all(|&r| r == 0) {
            out.push(prefix.clone());
            return;
        }
        for s in steps {
            if s.iter().zip(residual.iter()).any(|(&a, &b)| a > b) {
                continue;
            }
            for (r, &v) in residual.iter_mut().zip(s) {
                *r -= v;
            }
            prefix.push(s.clone());
            go(steps, residual, prefix, out);
            prefix.pop();
            for (r, &v) in residual.iter_mut().zip(s) {
                *r += v;
            }
        }
    }
    let mut out = Vec::new();
    go(steps, &mut lengths.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn brute_count(steps: &[Vec<u32>], lengths: &[u32]) -> BigUint {
    BigUint::from(brute_sequences(steps, lengths).len())
}

fn explicit_set(steps: &[Vec<u32>]) -> ValidatedStepSet {
    let vs: Vec<StepVector> = steps.iter().map(|e| StepVector::new(e.clone()).unwrap()).collect();
    StepSet::explicit(vs).unwrap().validate().unwrap()
}

#[test]
fn frozen_pairwise_alignment_counts() {
    // The three classical pairwise alignments of two length-1 strings.
    let unit2 = vec![vec![0, 1], vec![1, 0], vec![1, 1]];
    assert_eq!(brute_count(&unit2, &[1, 1]), BigUint::from(3u32));
    // Central value at (2,2), frozen from this oracle.
    assert_eq!(brute_count(&unit2, &[2, 2]), BigUint::from(13u32));
    let s = explicit_set(&unit2);
    assert_eq!(count(&s, &LengthTuple::new(vec![2, 2])).unwrap(), BigUint::from(13u32));
    assert_eq!(
        count_multinomial(&s, &LengthTuple::new(vec![2, 2])).unwrap(),
        BigUint::from(13u32)
    );
}

#[test]
fn frozen_parts_counts_for_pairwise() {
    let unit2 = vec![vec![0, 1], vec![1, 0], vec![1, 1]];
    let by_len: Vec<usize> = (0..=2)
        .map(|k| brute_sequences(&unit2, &[1, 1]).iter().filter(|s| s.len() == k).count())
        .collect();
    assert_eq!(by_len, vec![0, 1, 2]);
    let s = explicit_set(&unit2);
    let l = LengthTuple::new(vec![1, 1]);
    assert_eq!(count_with_parts(&s, &l, 1).unwrap(), BigUint::from(1u32));
    assert_eq!(count_with_parts(&s, &l, 2).unwrap(), BigUint::from(2u32));
}

#[test]
fn frozen_composition_counts() {
    // {1,2}-compositions of 5 with 3 parts: 122, 212, 221.
    let parts12 = vec![vec![1], vec![2]];
    let threes = brute_sequences(&parts12, &[5]).iter().filter(|s| s.len() == 3).count();
    assert_eq!(threes, 3);
    assert_eq!(
        compositions_with_parts(&BaseSet::finite(vec![1, 2]), 5, 3),
        BigUint::from(3u32)
    );
}

#[test]
fn example_universe_matches_brute_force() {
    let steps = vec![vec![1, 1], vec![1, 2], vec![2, 1]];
    let brute = brute_sequences(&steps, &[4, 5]);
    assert_eq!(brute.len(), 7);
    let s = explicit_set(&steps);
    let l = LengthTuple::new(vec![4, 5]);
    let engine = enumerate(&s, &l).unwrap();
    assert_eq!(engine.len(), brute.len());
    // Same set of matrices, independent of ordering.
    let mut brute_matrices: Vec<String> = brute
        .iter()
        .map(|cols| {
            let vs: Vec<StepVector> =
                cols.iter().map(|c| StepVector::new(c.clone()).unwrap()).collect();
            aligncount::AlignmentMatrix::from_columns(2, &vs).to_string()
        })
        .collect();
    brute_matrices.sort();
    let mut engine_matrices: Vec<String> = engine.iter().map(|m| m.to_string()).collect();
    engine_matrices.sort();
    assert_eq!(brute_matrices, engine_matrices);
}

fn small_step_set() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1usize..=3).prop_flat_map(|n| {
        let step = proptest::collection::vec(0u32..=2, n)
            .prop_filter("zero step", |v| v.iter().any(|&e| e > 0));
        (Just(n), proptest::collection::vec(step, 1..=5))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_routes_agree_with_brute_force(
        (n, steps) in small_step_set(),
        seed in any::<u64>(),
    ) {
        let lengths = {
            // Derive lengths from the seed to keep the tuple independent of
            // the step set shape.
            let mut l = Vec::with_capacity(n);
            let mut x = seed;
            for _ in 0..n {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                l.push((x >> 33) as u32 % 5);
            }
            l
        };
        let mut dedup = steps.clone();
        dedup.sort();
        dedup.dedup();
        let expected = brute_count(&dedup, &lengths);
        let set = explicit_set(&dedup);
        let tuple = LengthTuple::new(lengths.clone());

        let table = count(&set, &tuple).unwrap();
        prop_assert_eq!(&table, &expected);
        let multin = count_multinomial(&set, &tuple).unwrap();
        prop_assert_eq!(&multin, &expected);
        let listed = enumerate(&set, &tuple).unwrap();
        prop_assert_eq!(BigUint::from(listed.len()), expected.clone());

        // Parts split: layer sums reproduce the total.
        let mut by_parts = BigUint::from(0u32);
        for k in 0..=tuple.total() {
            by_parts += count_with_parts(&set, &tuple, k).unwrap();
        }
        prop_assert_eq!(&by_parts, &expected);

        // Series coefficient at the corner.
        let series = series_coefficients(&set, &tuple).unwrap();
        prop_assert_eq!(series.coefficient(tuple.lengths()).unwrap(), &expected);
    }

    #[test]
    fn every_enumerated_matrix_is_an_alignment(
        (n, steps) in small_step_set(),
    ) {
        let lengths = vec![3u32; n];
        let set = explicit_set(&steps);
        let tuple = LengthTuple::new(lengths);
        for m in enumerate(&set, &tuple).unwrap() {
            prop_assert!(is_alignment(&m, &set, &tuple).unwrap());
        }
    }

    #[test]
    fn counts_are_invariant_under_coordinate_permutation(
        (n, steps) in small_step_set(),
        rot in 0usize..3,
    ) {
        let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
        let lengths: Vec<u32> = (0..n as u32).map(|i| i + 1).collect();
        let set = explicit_set(&steps);
        let permuted_set = set.permute(&perm);
        let mut permuted_lengths = vec![0u32; n];
        for (i, &l) in lengths.iter().enumerate() {
            permuted_lengths[perm[i]] = l;
        }
        let a = count(&set, &LengthTuple::new(lengths)).unwrap();
        let b = count(&permuted_set, &LengthTuple::new(permuted_lengths)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn materialization_is_monotone_in_the_box(
        (n, steps) in small_step_set(),
    ) {
        let set = explicit_set(&steps);
        let small = LengthTuple::new(vec![1; n]);
        let large = LengthTuple::new(vec![2; n]);
        let inner = set.materialize(&small).unwrap();
        let outer = set.materialize(&large).unwrap();
        for s in &inner {
            prop_assert!(outer.contains(s));
        }
        // A box covering the componentwise maximum returns all of the set.
        let full = LengthTuple::new(vec![2; n]);
        prop_assert_eq!(set.materialize(&full).unwrap().len(), set.cardinality().unwrap());
    }

    #[test]
    fn sampled_alignments_are_valid(
        (n, steps) in small_step_set(),
        seed in any::<u64>(),
    ) {
        let set = explicit_set(&steps);
        let tuple = LengthTuple::new(vec![2; n]);
        if let Ok(sampler) = Sampler::new(&set, &tuple) {
            let m = sampler.sample_seeded(seed);
            prop_assert!(is_alignment(&m, &set, &tuple).unwrap());
        }
    }
}
