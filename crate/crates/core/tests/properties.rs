//! Randomized invariants.

mod common;

use proptest::prelude::*;
use std::collections::HashSet;

use pintersect_core::bits::BitVector;
use pintersect_core::canon::canonical_key;
use pintersect_core::graph::Graph;
use pintersect_core::graph6::{emit_graph6, parse_graph6};
use pintersect_core::rep::BinaryRepresentation;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        perm
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back), text);
    }

    #[test]
    fn graph6_round_trip_large_orders(g in arb_graph(70)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        use pintersect_core::graph6::{emit_edge_list, parse_edge_list};
        prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_key_is_a_graph_invariant(
        (g, perm) in arb_graph(8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_permutation(n))
        })
    ) {
        prop_assert_eq!(canonical_key(&g.relabel(&perm)), canonical_key(&g));
    }

    #[test]
    fn certificate_text_round_trip(
        (d, p, masks) in (0usize..=8).prop_flat_map(|d| {
            (Just(d), 1usize..=4, proptest::collection::vec(0u64..1 << d, 0..6))
        })
    ) {
        let vectors: Vec<BitVector> = masks.iter().map(|&m| BitVector::from_mask(d, m)).collect();
        let rep = BinaryRepresentation::new(d, p, vectors).unwrap();
        prop_assert_eq!(BinaryRepresentation::from_text(&rep.to_text()).unwrap(), rep);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn padding_a_dimension_preserves_decisions(g in arb_graph(5)) {
        use pintersect_core::solver::{decide_theta_leq, SearchConfig};
        let cfg = SearchConfig::default();
        for p in 1..=2 {
            for d in 0..=2 {
                if decide_theta_leq(&g, d, p, &cfg).unwrap().is_yes() {
                    prop_assert!(decide_theta_leq(&g, d + 1, p, &cfg).unwrap().is_yes());
                }
            }
        }
    }

    #[test]
    fn blow_up_membership_accepts_its_own_output(
        (base, parts, sizes) in arb_graph(4).prop_flat_map(|g| {
            let n = g.n();
            (
                Just(g),
                proptest::collection::vec(any::<bool>(), n),
                proptest::collection::vec(0usize..=2, n),
            )
        })
    ) {
        use pintersect_core::blowup::{BlowUpPattern, Part};
        let part: Vec<Part> = parts
            .iter()
            .map(|&c| if c { Part::Clique } else { Part::Independent })
            .collect();
        let pattern = BlowUpPattern::new(base, part, sizes).unwrap();
        let g = pattern.build().unwrap();
        prop_assert!(pattern.find_assignment(&g).is_some());
    }
}

#[test]
fn distinct_small_graphs_have_distinct_keys() {
    // sanity companion to the proptest invariance: keys separate the
    // catalogued isomorphism classes
    let graphs = pintersect_core::enumerate::enumerate_graphs(6).unwrap();
    let keys: HashSet<String> = graphs.iter().map(canonical_key).collect();
    assert_eq!(keys.len(), 156);
}
