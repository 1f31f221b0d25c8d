//! Simple undirected graphs, positively weighted graphs and paths.
//!
//! Vertices are the dense indices `0..n`. Adjacency is kept as one bit mask
//! per vertex, so graphs are limited to [`MAX_VERTICES`] vertices; every
//! algorithm in this crate is exhaustive anyway and only meant for small
//! inputs.

use std::collections::{BTreeMap, VecDeque};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range ends.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { size: n, limit: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::OutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!("repeated edge {{{u}, {v}}}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("valid vertex count")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// Complete bipartite graph with classes `0..a` and `a..a + b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] >> u >> 1).map(move |off| (u, u + 1 + off)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(full_mask(self.n))
    }

    /// Whether the subgraph induced by the vertex mask is connected.
    /// The empty set counts as disconnected.
    pub fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            if u >= self.n {
                return Err(Error::OutOfRange { index: u, n: self.n });
            }
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(Error::InvalidGraph(format!("vertex {u} listed twice")));
                }
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances, or [`Error::DisconnectedGraph`].
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.n)
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .collect::<Option<Vec<_>>>()
                    .ok_or(Error::DisconnectedGraph)
            })
            .collect()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of the set bits of `mask`, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// A connected graph with a positive rational weight on every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: BTreeMap<(usize, usize), Rational>,
}

impl WeightedGraph {
    /// `weights` must name each edge exactly once, in either orientation.
    pub fn new(
        n: usize,
        weights: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let weights: Vec<_> = weights.into_iter().collect();
        let graph = Graph::new(n, weights.iter().map(|(u, v, _)| (*u, *v)))?;
        let mut map = BTreeMap::new();
        for (u, v, w) in weights {
            if !w.is_positive() {
                return Err(Error::InvalidWeights(format!(
                    "edge {{{u}, {v}}} has non-positive weight"
                )));
            }
            map.insert(edge_key(u, v), w);
        }
        if !graph.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(WeightedGraph { graph, weights: map })
    }

    /// Weights every edge of `graph` by `weight(u, v)` (called with `u < v`).
    pub fn from_graph(graph: &Graph, mut weight: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        let n = graph.n();
        let weights: Vec<_> = graph.edges().into_iter().map(|(u, v)| (u, v, weight(u, v))).collect();
        WeightedGraph::new(n, weights)
    }

    pub fn unit(graph: &Graph) -> Result<Self> {
        WeightedGraph::from_graph(graph, |_, _| crate::rational::one())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&Rational> {
        self.weights.get(&edge_key(u, v))
    }

    /// `(u, v, weight)` with `u < v`, sorted by edge.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.weights.iter().map(|(&(u, v), w)| (u, v, w))
    }

    pub fn path_weight(&self, path: &Path) -> Option<Rational> {
        let mut total = crate::rational::zero();
        for pair in path.vertices().windows(2) {
            total += self.weight(pair[0], pair[1])?;
        }
        Some(total)
    }
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// A sequence of distinct vertices; its length is the number of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn vertex_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Consecutive vertices adjacent and all vertices distinct.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        !self.0.is_empty()
            && self.0.iter().all(|&v| v < g.n())
            && self.vertex_mask().count_ones() as usize == self.0.len()
            && self.0.windows(2).all(|p| g.has_edge(p[0], p[1]))
    }

    /// A path of `g` with no chords: only consecutive vertices are adjacent.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        self.is_path_in(g)
            && self.0.iter().enumerate().all(|(i, &u)| {
                self.0[i + 1..].iter().skip(1).all(|&v| !g.has_edge(u, v))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn rejects_malformed_graphs() {
        assert!(matches!(Graph::new(3, [(0, 0)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::InvalidGraph(_))));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::OutOfRange { index: 3, n: 3 }));
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::new(4, [(3, 1), (2, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
    }

    #[test]
    fn distances_of_cycle() {
        let d = Graph::cycle(5).distance_matrix().unwrap();
        assert_eq!(d[0], vec![0, 1, 2, 2, 1]);
        assert_eq!(Graph::empty(2).distance_matrix(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn weighted_graph_validation() {
        assert!(matches!(
            WeightedGraph::new(2, [(0, 1, int(0))]),
            Err(Error::InvalidWeights(_))
        ));
        assert_eq!(
            WeightedGraph::new(3, [(0, 1, int(1))]),
            Err(Error::DisconnectedGraph)
        );
        let w = WeightedGraph::new(3, [(1, 0, ratio(1, 3)), (1, 2, ratio(1, 5))]).unwrap();
        assert_eq!(w.weight(0, 1), Some(&ratio(1, 3)));
        assert_eq!(w.path_weight(&Path::new(vec![0, 1, 2])), Some(ratio(8, 15)));
    }

    #[test]
    fn induced_paths() {
        let c5 = Graph::cycle(5);
        assert!(Path::new(vec![0, 1, 2, 3]).is_induced_in(&c5));
        assert!(!Path::new(vec![0, 1, 2, 3, 4]).is_induced_in(&c5));
        assert!(!Path::new(vec![0, 2]).is_path_in(&c5));
        assert!(Path::new(vec![3]).is_induced_in(&c5));
    }
}
