use lcmlat::graphs::{
    all_graphs, chordality, edge_ideal, is_chordal, is_cochordal, named, verify_chordality_certificate, SimpleGraph,
};
use proptest::prelude::*;

/// Searches every vertex subset of size at least 4 for an induced cycle.
fn has_long_induced_cycle(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).filter(|m| m.count_ones() >= 4).any(|mask| {
        let vs: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let h = g.induced_subgraph(&vs).unwrap();
        let k = vs.len();
        let two_regular = (1..=k).all(|v| h.neighbors(v).len() == 2);
        // connected two-regular graph: walk the cycle from vertex 1
        let mut seen = vec![false; k + 1];
        let mut stack = vec![1];
        while let Some(v) = stack.pop() {
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(h.neighbors(v));
            }
        }
        two_regular && seen[1..].iter().all(|&s| s)
    })
}

#[test]
fn chordality_agrees_with_induced_cycle_search() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let cert = chordality(&g);
            assert_eq!(cert.is_chordal(), !has_long_induced_cycle(&g), "{g:?}");
            verify_chordality_certificate(&g, &cert).unwrap();
        }
    }
}

#[test]
fn labelled_chordal_graph_counts() {
    // OEIS A058862
    let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).filter(is_chordal).count()).collect();
    assert_eq!(counts, [1, 2, 8, 61, 822]);
}

#[test]
fn named_graphs() {
    assert!(is_cochordal(&named::path(4)));
    assert!(!is_cochordal(&named::cycle(5)));
    assert!(!is_cochordal(&named::two_k2()));
    assert!(!is_cochordal(&named::cycle(6)));
    assert!(is_cochordal(&named::complete(4)));
}

proptest! {
    #[test]
    fn complement_and_graph6_round_trip(n in 1usize..=10, bits in prop::collection::vec(any::<bool>(), 45)) {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let edges: Vec<(usize, usize)> = pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
        let g = SimpleGraph::new(n, &edges).unwrap();
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.complement().edge_count(), pairs.len() - g.edge_count());
        prop_assert_eq!(SimpleGraph::from_graph6(&g.to_graph6()).unwrap(), g.clone());
        if g.edge_count() > 0 {
            let i = edge_ideal(&g).unwrap();
            prop_assert_eq!(i.len(), g.edge_count());
            prop_assert_eq!(i.is_equigenerated(), Some(2));
        }
    }
}
