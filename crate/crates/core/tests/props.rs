//! Randomized property tests over arbitrary small graphs.

use proptest::prelude::*;

use xgraph::coloring::graph_coloring;
use xgraph::io::{labeled_edges, read_net, write_net};
use xgraph::mis::{is_maximal_independent_set, mis_fgk, mis_greedy};
use xgraph::mvc::{minimum_vertex_cover, two_approximation_cover, CoverDecider};
use xgraph::ops::max_degree_vertex;
use xgraph::{Graph, GraphKind, VertexId};

/// Arbitrary undirected graph on 1..=8 vertices.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, picks)| {
            let mut g = Graph::new(GraphKind::Undirected);
            let vs: Vec<VertexId> = (0..n).map(|_| g.add_vertex()).collect();
            let mut it = picks.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(vs[i], vs[j]).unwrap();
                    }
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn net_round_trip(g in arb_graph()) {
        let text = write_net(&g);
        let back = read_net(&text).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(labeled_edges(&back), labeled_edges(&g));
        prop_assert_eq!(write_net(&back), text);
    }

    #[test]
    fn independence_cover_duality(g in arb_graph()) {
        let mis = mis_fgk(&g).unwrap();
        let mvc = minimum_vertex_cover(&g, CoverDecider::Niedermeier).unwrap();
        prop_assert_eq!(mis.len() + mvc.len(), g.vertex_count());
        prop_assert!(is_maximal_independent_set(&g, &mis).unwrap());
        prop_assert!(mis_greedy(&g).len() <= mis.len());
    }

    #[test]
    fn approximation_factor(g in arb_graph()) {
        let opt = minimum_vertex_cover(&g, CoverDecider::BruteForce).unwrap();
        let approx = two_approximation_cover(&g).unwrap();
        prop_assert!(approx.len() <= 2 * opt.len());
        for (u, v) in g.edges() {
            prop_assert!(approx.contains(u) || approx.contains(v));
        }
    }

    #[test]
    fn coloring_is_proper_and_degree_bounded(g in arb_graph()) {
        let p = graph_coloring(&g).unwrap();
        prop_assert!(p.is_valid_for(&g).unwrap());
        let max_deg = g.degree(max_degree_vertex(&g).unwrap()).unwrap();
        prop_assert!(p.classes.len() <= max_deg + 1);
    }
}
