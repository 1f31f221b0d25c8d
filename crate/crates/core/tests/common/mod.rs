//! Random generators shared by the integration tests.
#![allow(dead_code)]

use metric_betweenness::geodesic::is_tight;
use metric_betweenness::graph::{Graph, Path, WeightedGraph};
use metric_betweenness::rational::{self, Rational};
use metric_betweenness::recognition::induced_paths;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random spanning tree plus each remaining edge with probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Weights `k/4` with `k` uniform in `2..=8`, i.e. on a grid in `[1/2, 2]`.
pub fn random_weights(rng: &mut impl Rng, g: &Graph) -> WeightedGraph {
    let weights: Vec<Rational> = g.edges().iter().map(|_| rational::ratio(rng.gen_range(2..=8), 4)).collect();
    let lookup = g.edges();
    WeightedGraph::from_graph(g, |u, v| weights[lookup.iter().position(|&e| e == (u, v)).unwrap()].clone()).unwrap()
}

/// Rejection-samples a tight weighting of a random connected graph.
pub fn random_tight_weighted(rng: &mut impl Rng, n: usize) -> WeightedGraph {
    loop {
        let g = random_connected_graph(rng, n, 0.4);
        let w = random_weights(rng, &g);
        if is_tight(&w) {
            return w;
        }
    }
}

/// A random graph with `min_n..=max_n` vertices together with a random
/// induced path that is not a geodesic.
pub fn random_non_geodesic_pair(rng: &mut impl Rng, min_n: usize, max_n: usize) -> (Graph, Path) {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let g = random_connected_graph(rng, n, 0.3);
        let mut candidates = Vec::new();
        for x in 0..n {
            let dist = g.bfs_distances(x);
            for y in x + 1..n {
                for p in induced_paths(&g, x, y).unwrap() {
                    if Some(p.len()) != dist[y] {
                        candidates.push(p);
                    }
                }
            }
        }
        if let Some(p) = candidates.choose(rng) {
            return (g, p.clone());
        }
    }
}
