mod common;

use metric_betweenness::enumeration::connected_labeled_graphs;
use metric_betweenness::geodesic::{
    check_prop24, is_tight, maximal_ordered_sets, structure_geodesics, tight_edges, weighted_geodesics,
};
use metric_betweenness::graph::{Path, WeightedGraph};
use metric_betweenness::metric::weighted_graph_metric;
use metric_betweenness::rational::Rational;
use metric_betweenness::structure::{adjacency_graph, betweenness_of_graph, betweenness_of_weighted, is_ordered};
use proptest::prelude::*;
use rayon::prelude::*;

/// Every simple path from `x` to `z`, by brute force.
fn simple_paths(w: &WeightedGraph, x: usize, z: usize) -> Vec<Path> {
    fn go(w: &WeightedGraph, z: usize, path: &mut Vec<usize>, out: &mut Vec<Path>) {
        let last = *path.last().unwrap();
        if last == z {
            out.push(Path::new(path.clone()));
            return;
        }
        for v in w.graph().neighbors(last).collect::<Vec<_>>() {
            if !path.contains(&v) {
                path.push(v);
                go(w, z, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(w, z, &mut vec![x], &mut out);
    out
}

#[test]
fn point5_on_graphic_structures_up_to_6() {
    for n in 1..=6 {
        let graphs: Vec<_> = connected_labeled_graphs(n).unwrap().collect();
        let failures = graphs
            .par_iter()
            .filter(|g| {
                let b = betweenness_of_graph(g).unwrap();
                let w = WeightedGraph::unit(g).unwrap();
                !check_prop24(&b, Some(&w), &[]).unwrap().passed()
            })
            .count();
        assert_eq!(failures, 0, "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn weighted_geodesics_are_the_minimum_weight_paths(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_connected_graph(&mut rng, n, 0.4);
        let w = common::random_weights(&mut rng, &g);
        let m = weighted_graph_metric(&w).unwrap();
        for x in 0..n {
            for z in 0..n {
                let found = weighted_geodesics(&w, x, z).unwrap();
                let mut brute: Vec<Path> = simple_paths(&w, x, z)
                    .into_iter()
                    .filter(|p| w.path_weight(p).as_ref() == Some(m.d(x, z)))
                    .collect();
                brute.sort();
                prop_assert_eq!(&found.paths, &brute);
            }
        }
    }

    #[test]
    fn tightness_is_the_adjacency_fixed_point(n in 2usize..=6, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_connected_graph(&mut rng, n, 0.5);
        let w = common::random_weights(&mut rng, &g);
        let fixed = adjacency_graph(&betweenness_of_weighted(&w).unwrap()) == g;
        prop_assert_eq!(is_tight(&w), fixed);
        prop_assert_eq!(tight_edges(&w).len() == g.edge_count(), fixed);
    }

    #[test]
    fn tight_weightings_share_their_geodesics(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let w = common::random_tight_weighted(&mut rng, n);
        let b = betweenness_of_weighted(&w).unwrap();
        let m = weighted_graph_metric(&w).unwrap();
        let report = check_prop24(&b, Some(&w), &[]).unwrap();
        prop_assert!(report.passed(), "{:?}", report.violations);
        prop_assert_eq!(report.points[3], Some(true));
        for x in 0..n {
            for z in 0..n {
                for p in weighted_geodesics(&w, x, z).unwrap().paths {
                    prop_assert!(p.is_induced_in(w.graph()));
                }
                for p in structure_geodesics(&b, x, z).unwrap().paths {
                    prop_assert!(p.is_induced_in(w.graph()));
                    let total: Rational = w.path_weight(&p).unwrap();
                    prop_assert_eq!(&total, m.d(x, z));
                }
            }
        }
    }

    #[test]
    fn maximal_ordered_sets_are_ordered_and_maximal(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_connected_graph(&mut rng, n, 0.3);
        let b = betweenness_of_weighted(&common::random_weights(&mut rng, &g)).unwrap();
        for seq in maximal_ordered_sets(&b) {
            prop_assert!(b.is_ordered_as(&seq));
            for p in (0..n).filter(|p| !seq.contains(p)) {
                let mut bigger = seq.clone();
                bigger.push(p);
                prop_assert!(is_ordered(&b, &bigger).unwrap().is_none());
            }
        }
    }
}

#[test]
fn prop24_rejects_mismatched_weightings() {
    let g = metric_betweenness::Graph::complete(3);
    let light = WeightedGraph::from_graph(&g, |u, v| {
        if (u, v) == (0, 2) { metric_betweenness::rational::int(3) } else { metric_betweenness::rational::one() }
    })
    .unwrap();
    let b = betweenness_of_graph(&g).unwrap();
    assert!(check_prop24(&b, Some(&light), &[]).is_err());
}
