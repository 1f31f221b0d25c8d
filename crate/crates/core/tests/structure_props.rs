mod common;

use metric_betweenness::enumeration::connected_labeled_graphs;
use metric_betweenness::metric::{weighted_graph_metric, MetricSpace};
use metric_betweenness::rational::{self, Rational};
use metric_betweenness::structure::{
    adjacency_graph, betweenness_of_graph, betweenness_of_metric, is_extension, is_ordered, BetweennessStructure,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;

/// All orderings of `items`, by Heap's algorithm.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(items.len(), &mut items.to_vec(), &mut out);
    out
}

/// L1 metric on distinct integer points of the plane.
fn l1_metric(points: &[(i64, i64)]) -> Option<MetricSpace> {
    let d: Vec<Vec<i64>> = points
        .iter()
        .map(|a| points.iter().map(|b| (a.0 - b.0).abs() + (a.1 - b.1).abs()).collect())
        .collect();
    MetricSpace::from_integers(&d).ok()
}

/// Either an L1 point metric or a random weighted graph metric.
fn metric_strategy(max_n: usize) -> impl Strategy<Value = MetricSpace> {
    prop_oneof![
        prop::collection::vec((0i64..4, 0i64..4), 1..=max_n).prop_filter_map("points coincide", |p| l1_metric(&p)),
        (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
            let mut rng = common::rng(seed);
            let g = common::random_connected_graph(&mut rng, n, 0.3);
            weighted_graph_metric(&common::random_weights(&mut rng, &g)).unwrap()
        }),
    ]
}

fn polygon_equality(m: &MetricSpace, seq: &[usize]) -> bool {
    let sum: Rational = seq.windows(2).map(|w| m.d(w[0], w[1]).clone()).sum();
    *m.d(seq[0], seq[seq.len() - 1]) == sum
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn metric_structures_satisfy_trichotomy(m in metric_strategy(7)) {
        let b = betweenness_of_metric(&m);
        let n = m.n();
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let middles = [b.between(y, x, z), b.between(x, y, z), b.between(x, z, y)];
                    prop_assert!(middles.iter().filter(|&&t| t).count() <= 1);
                    prop_assert_eq!(b.between(x, y, z), *m.d(x, z) == m.d(x, y) + m.d(y, z));
                }
            }
        }
        prop_assert_eq!(BetweennessStructure::new(n, b.triples().iter().copied()).unwrap(), b);
    }

    #[test]
    fn adjacency_graph_of_a_metric_is_connected(m in metric_strategy(7)) {
        prop_assert!(adjacency_graph(&betweenness_of_metric(&m)).is_connected());
    }

    #[test]
    fn polygon_equality_decides_orderings(m in metric_strategy(7), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let mut points: Vec<usize> = (0..m.n()).collect();
        points.shuffle(&mut rng);
        let k = rand::Rng::gen_range(&mut rng, 1..=m.n());
        let mut candidate = points[..k].to_vec();
        if rand::Rng::gen_bool(&mut rng, 0.5) {
            // points between two ends, sorted by distance from the first end
            let (a, c) = (points[0], points[points.len() - 1]);
            candidate = (0..m.n()).filter(|&y| *m.d(a, c) == m.d(a, y) + m.d(y, c)).collect();
            candidate.sort_by(|&p, &q| m.d(a, p).cmp(m.d(a, q)));
        }
        let (k, candidate) = (candidate.len(), candidate.as_slice());
        let b = betweenness_of_metric(&m);
        let found = is_ordered(&b, candidate).unwrap();
        if k >= 3 {
            let reversed: Vec<usize> = candidate.iter().rev().copied().collect();
            let matches = found.as_deref().is_some_and(|o| o == candidate || o == reversed.as_slice());
            prop_assert_eq!(matches, polygon_equality(&m, candidate));
        } else {
            prop_assert!(found.is_some());
        }
    }

    #[test]
    fn extension_is_a_partial_order(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_connected_graph(&mut rng, n, 0.4);
        let bs: Vec<_> = (0..3)
            .map(|i| {
                if i == 0 {
                    betweenness_of_graph(&g).unwrap()
                } else {
                    betweenness_of_metric(&weighted_graph_metric(&common::random_weights(&mut rng, &g)).unwrap())
                }
            })
            .collect();
        let ext = |a: &BetweennessStructure, b: &BetweennessStructure| is_extension(a, b).unwrap();
        for a in &bs {
            prop_assert!(ext(a, a));
            for b in &bs {
                if ext(a, b) && ext(b, a) {
                    prop_assert_eq!(a, b);
                }
                for c in &bs {
                    if ext(a, b) && ext(b, c) {
                        prop_assert!(ext(a, c));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn is_ordered_matches_permutation_search(n in 1usize..=8, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_connected_graph(&mut rng, n, 0.15);
        let b = betweenness_of_graph(&g).unwrap();
        let mut points: Vec<usize> = (0..n).collect();
        points.shuffle(&mut rng);
        let k = rand::Rng::gen_range(&mut rng, 1..=n);
        let y = &points[..k];
        let brute = permutations(y).into_iter().any(|p| b.is_ordered_as(&p));
        let found = is_ordered(&b, y).unwrap();
        prop_assert_eq!(found.is_some(), brute);
        if let Some(order) = found {
            prop_assert!(b.is_ordered_as(&order));
            let mut sorted = order.clone();
            sorted.sort_unstable();
            let mut expected = y.to_vec();
            expected.sort_unstable();
            prop_assert_eq!(sorted, expected);
        }
    }
}

#[test]
fn adjacency_graph_of_graphic_structure_up_to_5() {
    for n in 1..=5 {
        for g in connected_labeled_graphs(n).unwrap() {
            assert_eq!(adjacency_graph(&betweenness_of_graph(&g).unwrap()), g);
        }
    }
}

#[test]
fn scaling_keeps_the_structure() {
    let m = l1_metric(&[(0, 0), (1, 0), (1, 2), (3, 3)]).unwrap();
    let b = betweenness_of_metric(&m);
    assert_eq!(betweenness_of_metric(&m.scaled(&rational::ratio(7, 3))), b);
}
