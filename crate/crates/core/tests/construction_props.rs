mod common;

use metric_betweenness::constructions::{bipartite_family, lemma31_weighting, step2_weighting};
use metric_betweenness::enumeration::connected_labeled_graphs;
use metric_betweenness::geodesic::is_tight;
use metric_betweenness::recognition::{is_block_graph, is_distance_hereditary};
use metric_betweenness::structure::{adjacency_graph, betweenness_of_graph, is_extension};
use metric_betweenness::Graph;

#[test]
fn lemma31_on_random_pairs() {
    let mut rng = common::rng(31);
    for _ in 0..100 {
        let (g, path) = common::random_non_geodesic_pair(&mut rng, 4, 7);
        let r = lemma31_weighting(&g, &path, None).unwrap();
        assert!(r.all_claims_hold(), "{g:?} {path:?} {:?}", r.claims);
        let graphic = betweenness_of_graph(&g).unwrap();
        assert_eq!(adjacency_graph(&r.structure), g);
        assert!(!is_extension(&r.structure, &graphic).unwrap());
        assert!(!is_extension(&graphic, &r.structure).unwrap());
    }
}

#[test]
fn step2_on_every_eligible_graph_up_to_6() {
    let mut eligible = 0;
    for n in 4..=6 {
        for g in connected_labeled_graphs(n).unwrap() {
            if is_block_graph(&g).unwrap().holds || !is_distance_hereditary(&g).unwrap().holds {
                continue;
            }
            let (r, frame) = step2_weighting(&g).unwrap();
            eligible += 1;
            assert!(is_tight(&r.weighted));
            assert!(r.all_claims_hold(), "{g:?} {frame:?} {:?}", r.claims);
            assert!(!g.has_edge(frame.x, frame.y) && g.has_edge(frame.x, frame.u));
        }
    }
    assert!(eligible > 0);
}

#[test]
fn bipartite_family_sizes() {
    for (n, expected) in [(4, 2), (5, 4), (6, 16)] {
        let family = bipartite_family(n).unwrap();
        assert_eq!(family.len(), expected);
        let k = Graph::complete_bipartite(n / 2, n - n / 2);
        for r in &family {
            assert!(r.all_claims_hold());
            assert_eq!(adjacency_graph(&r.structure), k);
        }
    }
}
