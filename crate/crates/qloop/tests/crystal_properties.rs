//! Property and cross-checks for the crystal layer: operator axioms on
//! randomly banded graphs, braid compatibility of the Weyl action,
//! degree-shift equivariance, and band independence of the witness-cut
//! census counts.

use proptest::prelude::*;
use qloop::cartan::{AffineCartanDatum, FamilyADE};
use qloop::crystal::{
    bijection_census, connected_component, is_extremal, node_degree, verify_node_invariants,
    weyl_action, weyl_simple_reflection, CrystalNode, LevelZeroFundNode, TensorNode,
};
use qloop::weyl::WeylWord;

fn a1() -> AffineCartanDatum {
    AffineCartanDatum::new(FamilyADE::A, 1).unwrap()
}

fn a2() -> AffineCartanDatum {
    AffineCartanDatum::new(FamilyADE::A, 2).unwrap()
}

/// A fixed sample of two-factor tensor nodes on the triangle diagram.
/// Built directly rather than by component search: a mixed-color
/// component is infinite inside any degree band (the factor degrees can
/// skew without bound), so enumeration would only hit the node cap.
fn a2_sample(datum: &AffineCartanDatum) -> Vec<TensorNode> {
    let mut sample = Vec::new();
    for first in [vec![1], vec![2], vec![3]] {
        for second in [vec![1, 2], vec![1, 3], vec![2, 3]] {
            for degree in [0, 1] {
                let factors = vec![
                    LevelZeroFundNode::new(datum, first.clone(), 0).unwrap(),
                    LevelZeroFundNode::new(datum, second.clone(), degree).unwrap(),
                ];
                sample.push(TensorNode::new(datum, factors).unwrap());
            }
        }
    }
    sample
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Braid relation on the Weyl action: for any two distinct colors of
    // the triangle diagram, S_i S_j S_i = S_j S_i S_j on every node, even
    // after a random prefix walk.
    #[test]
    fn braid_relation_holds_on_tensor_nodes(
        pick in 0usize..12,
        i in 0usize..3,
        j in 0usize..3,
        prefix in prop::collection::vec(0usize..3, 0..3),
    ) {
        prop_assume!(i != j);
        let d = a2();
        let sample = a2_sample(&d);
        let node = &sample[pick % sample.len()];
        let start = weyl_action(&d, &WeylWord::new(&d, prefix).unwrap(), node).unwrap();
        let lhs = WeylWord::new(&d, vec![i, j, i]).unwrap();
        let rhs = WeylWord::new(&d, vec![j, i, j]).unwrap();
        prop_assert_eq!(
            weyl_action(&d, &lhs, &start).unwrap(),
            weyl_action(&d, &rhs, &start).unwrap()
        );
    }

    // The Weyl action intertwines the weight action of the word.
    #[test]
    fn weyl_action_moves_weights_correctly(
        pick in 0usize..12,
        word in prop::collection::vec(0usize..3, 0..5),
    ) {
        let d = a2();
        let sample = a2_sample(&d);
        let node = &sample[pick % sample.len()];
        let w = WeylWord::new(&d, word).unwrap();
        let moved = weyl_action(&d, &w, node).unwrap();
        prop_assert_eq!(
            moved.weight(&d).unwrap(),
            w.act_weight(&d, &node.weight(&d).unwrap()).unwrap()
        );
    }

    // Degree shifts are crystal automorphisms: they commute with every
    // raising and lowering operator on columns.
    #[test]
    fn degree_shift_is_equivariant_on_columns(
        letters in prop::collection::btree_set(1usize..=4, 1..=3),
        degree in -3i64..=3,
        shift in -2i64..=2,
        color in 0usize..4,
    ) {
        let d = AffineCartanDatum::new(FamilyADE::A, 3).unwrap();
        let node = LevelZeroFundNode::new(&d, letters.into_iter().collect(), degree).unwrap();
        for raise in [false, true] {
            let stepped = if raise { node.e_step(&d, color) } else { node.f_step(&d, color) };
            let shifted = node.z_shift(shift);
            let stepped_shifted =
                if raise { shifted.e_step(&d, color) } else { shifted.f_step(&d, color) };
            prop_assert_eq!(
                stepped.unwrap().map(|b| b.z_shift(shift)),
                stepped_shifted.unwrap()
            );
        }
    }

    // Every banded component satisfies the crystal axioms, whatever the
    // band, and its nodes pass the per-node invariant suite.
    #[test]
    fn banded_components_satisfy_the_axioms(
        lo in -3i64..=0,
        width in 0i64..=3,
        seed_color in 1usize..=2,
    ) {
        let d = a2();
        let seed = LevelZeroFundNode::fundamental(&d, seed_color).unwrap();
        let graph = connected_component(&d, &seed, (lo, lo + width), 10_000, "prop").unwrap();
        graph.verify_crystal_axioms(&d).unwrap();
        for node in graph.nodes() {
            verify_node_invariants(&d, node).unwrap();
        }
    }
}

// The orbit of the extremal seed under simple reflections consists of
// extremal nodes, and each reflection lands on the reflected weight.
#[test]
fn reflection_orbit_of_the_seed_stays_extremal() {
    let d = a1();
    let seed = TensorNode::extremal_seed(&d, &[2]).unwrap();
    let mut orbit = vec![seed.clone()];
    for letters in [vec![0], vec![1], vec![0, 1], vec![1, 0]] {
        let word = WeylWord::new(&d, letters).unwrap();
        orbit.push(weyl_action(&d, &word, &seed).unwrap());
    }
    for node in &orbit {
        assert!(is_extremal(&d, node, 2).unwrap(), "node {node}");
    }
    // One step down the classical string is no longer extremal.
    let middle = seed.f_step(&d, 1).unwrap().unwrap();
    assert!(!is_extremal(&d, &middle, 2).unwrap());
}

// Reflecting twice with the same color returns to the start.
#[test]
fn simple_reflections_are_involutions() {
    let d = a2();
    for node in a2_sample(&d) {
        for i in 0..3 {
            let once = weyl_simple_reflection(&d, &node, i).unwrap();
            let twice = weyl_simple_reflection(&d, &once, i).unwrap();
            assert_eq!(twice, node, "color {i} at {node}");
        }
    }
}

// Component enumeration is canonical: the same inputs give the same
// sorted node list and edge set, byte for byte.
#[test]
fn component_enumeration_is_deterministic() {
    let d = a1();
    let seed = TensorNode::extremal_seed(&d, &[2]).unwrap();
    let one = connected_component(&d, &seed, (-2, 2), 10_000, "run").unwrap();
    let two = connected_component(&d, &seed, (-2, 2), 10_000, "run").unwrap();
    assert_eq!(
        serde_json::to_string(&one).unwrap(),
        serde_json::to_string(&two).unwrap()
    );
}

// Census counts filtered by a witness-degree cut are band independent
// once the band covers the cut plus the drop range: widening the band
// changes the raw counts but not the filtered ones.
#[test]
fn witness_cut_census_counts_are_band_independent() {
    let d = a1();
    let cut = 2i64;
    let n_max = 2i64;
    for multiplicities in [vec![1usize], vec![2usize]] {
        let narrow = bijection_census(&d, &multiplicities, n_max, (-5, 5), 5, 100_000).unwrap();
        let wide = bijection_census(&d, &multiplicities, n_max, (-7, 7), 7, 100_000).unwrap();
        for cell in &narrow.cells {
            let other = wide.cell(cell.drop, &cell.classical).unwrap();
            assert_eq!(
                cell.vectors_with_witness_at_most(cut),
                other.vectors_with_witness_at_most(cut),
                "slot ({}, {:?}) for multiplicities {:?}",
                cell.drop,
                cell.classical,
                multiplicities
            );
        }
        // Slots only the wide run sees lie past the cut entirely.
        for cell in &wide.cells {
            if narrow.cell(cell.drop, &cell.classical).is_none() {
                assert_eq!(cell.vectors_with_witness_at_most(cut), 0);
            }
        }
    }
}

// The witness ladder of the doubled-column seed climbs by two from
// -2 * floor(drop / 2): one new vector per diagonal degree step, with
// deeper drops reaching slightly below the seed degree.
#[test]
fn doubled_column_witness_ladder_climbs_by_two() {
    let d = a1();
    let report = bijection_census(&d, &[2], 3, (-6, 6), 9, 100_000).unwrap();
    for drop in 0..=3 {
        let cell = report.cell(drop, &[2]).unwrap();
        let start = -(drop / 2);
        let expected: Vec<i64> = (0..cell.witness_degrees.len() as i64)
            .map(|k| 2 * (start + k))
            .collect();
        assert_eq!(cell.witness_degrees, expected, "drop {drop}");
        assert_eq!(cell.witness_degrees.len() as i64, 4 + drop / 2, "drop {drop}");
    }
}

// Degrees recorded by the graph respect the band on every node.
#[test]
fn all_component_nodes_lie_in_the_band() {
    let d = a1();
    let seed = TensorNode::extremal_seed(&d, &[2]).unwrap();
    let graph = connected_component(&d, &seed, (-2, 1), 100_000, "band").unwrap();
    assert!(!graph.is_empty());
    for node in graph.nodes() {
        let degree = node_degree(&d, node).unwrap();
        assert!((-2..=1).contains(&degree), "node {node} at degree {degree}");
    }
}

// A mixed-color tensor component is infinite inside any band: the factor
// degrees can skew without bound at fixed total degree, so enumeration
// must stop at the node cap rather than loop forever or truncate quietly.
#[test]
fn mixed_color_components_hit_the_node_cap() {
    let d = a2();
    let seed = TensorNode::extremal_seed(&d, &[1, 1]).unwrap();
    let result = connected_component(&d, &seed, (-1, 1), 2000, "skew");
    assert!(matches!(result, Err(qloop::QError::BandExceeded(_))));
}
