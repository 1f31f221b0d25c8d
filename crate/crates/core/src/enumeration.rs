//! Exhaustive search for all representations of a small graph.
//!
//! A representation of a connected graph `G` is a metrizable betweenness
//! structure whose adjacency graph is exactly `G`. The search walks the
//! 3-subsets of the vertex set in lexicographic order and gives each one of
//! four states: no collinearity, or one of its three points as the middle.
//! Three rules cut the tree before any metric is sought:
//!
//! * an edge `{x, z}` of `G` can never have a middle;
//! * a non-edge needs at least one middle, checked when the last 3-subset
//!   containing it is assigned;
//! * on every fully assigned 4-subset, `(x y z)` and `(x z w)` must imply
//!   `(x y w)` and `(y z w)`, which holds in every metric.
//!
//! Each surviving assignment is then handed to the exact linear program in
//! [`crate::metrizability`], which alone decides whether it is kept.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::graph::{full_mask, Graph};
use crate::metrizability::{all_candidates, is_metrizable};
use crate::recognition::{is_block_graph, is_distance_hereditary};
use crate::structure::{adjacency_graph, betweenness_of_graph, is_extension, BetweennessStructure, Triple};
use crate::{Error, Result};

/// Largest vertex count the search accepts. Six vertices only run under a
/// node budget.
pub const MAX_SEARCH_VERTICES: usize = 6;
/// Node budget applied at six vertices when the caller gives none.
pub const DEFAULT_BUDGET: u64 = 20_000_000;
pub const MAX_GENERATED_VERTICES: usize = 7;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Maximum number of search-tree nodes before giving up.
    pub budget: Option<u64>,
}

/// All representations of one graph, with the derived flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport {
    graph: Graph,
    graphic: BetweennessStructure,
    representations: Vec<BetweennessStructure>,
    nodes: u64,
}

impl RepresentationReport {
    fn new(graph: Graph, mut representations: Vec<BetweennessStructure>, nodes: u64) -> Result<Self> {
        representations.sort();
        representations.dedup();
        let graphic = betweenness_of_graph(&graph)?;
        Ok(RepresentationReport { graph, graphic, representations, nodes })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `B(G)`.
    pub fn graphic(&self) -> &BetweennessStructure {
        &self.graphic
    }

    /// Sorted, without duplicates.
    pub fn representations(&self) -> &[BetweennessStructure] {
        &self.representations
    }

    pub fn count(&self) -> usize {
        self.representations.len()
    }

    /// Search-tree nodes visited.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn contains_graphic(&self) -> bool {
        self.representations.binary_search(&self.graphic).is_ok()
    }

    pub fn is_uniquely_representable(&self) -> bool {
        self.representations == [self.graphic.clone()]
    }

    /// `B(G) ⪯ B` for every representation `B`.
    pub fn bounds_below(&self) -> bool {
        self.representations
            .iter()
            .all(|b| is_extension(&self.graphic, b).expect("same point count"))
    }

    /// `B ⪯ B(G)` for every representation `B`.
    pub fn bounds_above(&self) -> bool {
        self.representations
            .iter()
            .all(|b| is_extension(b, &self.graphic).expect("same point count"))
    }
}

/// Precomputed indexing for one graph.
struct SearchSpace {
    n: usize,
    subsets: Vec<[usize; 3]>,
    /// `index[a * n * n + b * n + c]` for any ordering of a 3-subset.
    index: Vec<usize>,
    /// Allowed middles per subset, `NONE` first.
    choices: Vec<Vec<usize>>,
    /// Non-edges whose last containing subset is `k`.
    pairs_done: Vec<Vec<(usize, usize)>>,
    /// 4-subsets whose last contained 3-subset is `k`.
    quads_done: Vec<Vec<[usize; 4]>>,
}

impl SearchSpace {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut subsets = Vec::new();
        let mut index = vec![NONE; n * n * n];
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let k = subsets.len();
                    for [x, y, z] in permutations3([a, b, c]) {
                        index[x * n * n + y * n + z] = k;
                    }
                    subsets.push([a, b, c]);
                }
            }
        }
        let choices = subsets
            .iter()
            .map(|&[a, b, c]| {
                let mut opts = vec![NONE];
                for (m, p, q) in [(a, b, c), (b, a, c), (c, a, b)] {
                    if !g.has_edge(p, q) {
                        opts.push(m);
                    }
                }
                opts
            })
            .collect();
        let mut pairs_done = vec![Vec::new(); subsets.len()];
        let mut quads_done = vec![Vec::new(); subsets.len()];
        let sub = |a: usize, b: usize, c: usize| index[a * n * n + b * n + c];
        for x in 0..n {
            for z in x + 1..n {
                if g.has_edge(x, z) {
                    continue;
                }
                if let Some(last) = (0..n).filter(|&y| y != x && y != z).map(|y| sub(x, y, z)).max() {
                    pairs_done[last].push((x, z));
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let last = [sub(a, b, c), sub(a, b, d), sub(a, c, d), sub(b, c, d)]
                            .into_iter()
                            .max()
                            .expect("four subsets");
                        quads_done[last].push([a, b, c, d]);
                    }
                }
            }
        }
        SearchSpace { n, subsets, index, choices, pairs_done, quads_done }
    }

    fn subset(&self, x: usize, y: usize, z: usize) -> usize {
        self.index[x * self.n * self.n + y * self.n + z]
    }

    fn between(&self, mid: &[usize], x: usize, y: usize, z: usize) -> bool {
        mid[self.subset(x, y, z)] == y
    }

    /// Checks every rule that becomes decidable once subset `k` is assigned.
    fn consistent_after(&self, mid: &[usize], k: usize) -> bool {
        let pairs_ok = self.pairs_done[k].iter().all(|&(x, z)| {
            (0..self.n).any(|y| y != x && y != z && self.between(mid, x, y, z))
        });
        pairs_ok && self.quads_done[k].iter().all(|&q| self.inference_holds(mid, q))
    }

    fn inference_holds(&self, mid: &[usize], quad: [usize; 4]) -> bool {
        permutations4(quad).all(|[x, y, z, w]| {
            !(self.between(mid, x, y, z) && self.between(mid, x, z, w))
                || (self.between(mid, x, y, w) && self.between(mid, y, z, w))
        })
    }

    fn to_structure(&self, mid: &[usize]) -> BetweennessStructure {
        let triples: BTreeSet<Triple> = self
            .subsets
            .iter()
            .zip(mid)
            .filter(|(_, &m)| m != NONE)
            .map(|(s, &m)| {
                let mut outer = s.iter().copied().filter(|&v| v != m);
                let (p, q) = (outer.next().expect("outer"), outer.next().expect("outer"));
                [p, m, q]
            })
            .collect();
        BetweennessStructure::from_canonical_unchecked(self.n, triples)
    }

    /// Depth-first search collecting every assignment that passes the rules.
    fn collect(&self, budget: Option<u64>) -> Result<(Vec<BetweennessStructure>, u64)> {
        let m = self.subsets.len();
        let mut mid = vec![NONE; m];
        let mut out = Vec::new();
        let mut nodes = 0u64;
        if m == 0 {
            return Ok((vec![self.to_structure(&mid)], 1));
        }
        // iterative DFS: cursor[k] is the next choice to try at depth k
        let mut cursor = vec![0usize; m];
        let mut depth = 0usize;
        loop {
            if cursor[depth] == self.choices[depth].len() {
                cursor[depth] = 0;
                mid[depth] = NONE;
                if depth == 0 {
                    break;
                }
                depth -= 1;
                continue;
            }
            mid[depth] = self.choices[depth][cursor[depth]];
            cursor[depth] += 1;
            nodes += 1;
            if let Some(limit) = budget {
                if nodes > limit {
                    return Err(Error::BudgetExceeded(limit));
                }
            }
            if !self.consistent_after(&mid, depth) {
                continue;
            }
            if depth + 1 == m {
                out.push(self.to_structure(&mid));
            } else {
                depth += 1;
            }
        }
        Ok((out, nodes))
    }
}

fn permutations3([a, b, c]: [usize; 3]) -> [[usize; 3]; 6] {
    [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
}

fn permutations4(q: [usize; 4]) -> impl Iterator<Item = [usize; 4]> {
    const ORDERS: [[usize; 4]; 24] = [
        [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
        [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
        [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0], [2, 3, 0, 1], [2, 3, 1, 0],
        [3, 0, 1, 2], [3, 0, 2, 1], [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
    ];
    ORDERS.into_iter().map(move |[a, b, c, d]| [q[a], q[b], q[c], q[d]])
}

/// All representations of `g`, using [`SearchOptions::default`].
pub fn enumerate_representations(g: &Graph) -> Result<RepresentationReport> {
    enumerate_representations_with(g, SearchOptions::default())
}

pub fn enumerate_representations_with(g: &Graph, options: SearchOptions) -> Result<RepresentationReport> {
    if g.n() > MAX_SEARCH_VERTICES {
        return Err(Error::TooLarge { size: g.n(), limit: MAX_SEARCH_VERTICES });
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let budget = match options.budget {
        Some(b) => Some(b),
        None if g.n() == MAX_SEARCH_VERTICES => Some(DEFAULT_BUDGET),
        None => None,
    };
    let space = SearchSpace::new(g);
    let (candidates, nodes) = space.collect(budget)?;
    let representations: Vec<_> = candidates
        .into_par_iter()
        .filter(|b| is_metrizable(b).is_some())
        .collect();
    debug_assert!(representations.iter().all(|b| adjacency_graph(b) == *g));
    RepresentationReport::new(g.clone(), representations, nodes)
}

/// Oracle for the pruned search: tries every trichotomous relation on the
/// vertex set and keeps the metrizable ones whose adjacency graph is `g`.
pub fn enumerate_representations_unpruned(g: &Graph) -> Result<RepresentationReport> {
    const LIMIT: usize = 4;
    if g.n() > LIMIT {
        return Err(Error::TooLarge { size: g.n(), limit: LIMIT });
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let all = all_candidates(g.n());
    let nodes = all.len() as u64;
    let reps = all
        .into_iter()
        .filter(|b| adjacency_graph(b) == *g && is_metrizable(b).is_some())
        .collect();
    RepresentationReport::new(g.clone(), reps, nodes)
}

/// Every connected graph on the labelled vertex set `0..n`, in order of the
/// edge bit mask (bit `i` is the `i`-th pair in lexicographic order).
pub fn connected_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_GENERATED_VERTICES {
        return Err(Error::TooLarge { size: n, limit: MAX_GENERATED_VERTICES });
    }
    if n == 0 {
        return Err(Error::TooSmall { size: 0, min: 1 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |code| {
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        // cheap connectivity test before building the graph
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in crate::graph::bits(frontier) {
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        (seen == full_mask(n)).then(|| {
            Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &p)| p))
                .expect("valid edges")
        })
    }))
}

/// One graph's verdicts, shared by the theorem checks.
#[derive(Debug, Clone)]
pub struct GraphSurvey {
    pub report: RepresentationReport,
    pub is_block_graph: bool,
    pub is_distance_hereditary: bool,
}

impl GraphSurvey {
    pub fn new(g: &Graph, options: SearchOptions) -> Result<Self> {
        Ok(GraphSurvey {
            report: enumerate_representations_with(g, options)?,
            is_block_graph: is_block_graph(g)?.holds,
            is_distance_hereditary: is_distance_hereditary(g)?.holds,
        })
    }

    pub fn is_tree(&self) -> bool {
        self.report.graph().edge_count() + 1 == self.report.graph().n()
    }

    /// Bounds-below agrees with distance-heredity.
    pub fn satisfies_theorem1(&self) -> bool {
        self.report.bounds_below() == self.is_distance_hereditary
    }

    /// Uniqueness, being a block graph and bounding from above coincide.
    pub fn satisfies_theorem2(&self) -> bool {
        let unique = self.report.count() == 1 && self.report.is_uniquely_representable();
        unique == self.is_block_graph && unique == self.report.bounds_above()
    }

    /// Trees have exactly one representation.
    pub fn satisfies_dress(&self) -> bool {
        !self.is_tree() || self.report.is_uniquely_representable()
    }
}

/// Surveys every connected labelled graph with at most `n_max` vertices.
pub fn survey(n_max: usize, options: SearchOptions) -> Result<Vec<GraphSurvey>> {
    if n_max > MAX_SEARCH_VERTICES {
        return Err(Error::TooLarge { size: n_max, limit: MAX_SEARCH_VERTICES });
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        let graphs: Vec<Graph> = connected_labeled_graphs(n)?.collect();
        let rows: Result<Vec<_>> = graphs.par_iter().map(|g| GraphSurvey::new(g, options)).collect();
        out.extend(rows?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// Bounds below ⟺ distance-hereditary.
    Theorem1,
    /// Unique ⟺ block graph ⟺ bounds above.
    Theorem2,
    /// Trees are uniquely representable.
    Dress,
}

impl Claim {
    pub fn holds_for(self, s: &GraphSurvey) -> bool {
        match self {
            Claim::Theorem1 => s.satisfies_theorem1(),
            Claim::Theorem2 => s.satisfies_theorem2(),
            Claim::Dress => s.satisfies_dress(),
        }
    }
}

/// Outcome of checking a claim on every surveyed graph.
#[derive(Debug, Clone)]
pub struct VerdictTable {
    pub claim: Claim,
    pub rows: Vec<GraphSurvey>,
    /// Indices into `rows` where the claim fails.
    pub counterexamples: Vec<usize>,
}

impl VerdictTable {
    pub fn from_survey(claim: Claim, rows: Vec<GraphSurvey>) -> Self {
        let counterexamples = rows
            .iter()
            .enumerate()
            .filter(|(_, s)| !claim.holds_for(s))
            .map(|(i, _)| i)
            .collect();
        VerdictTable { claim, rows, counterexamples }
    }

    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub const MAX_VERIFY_VERTICES: usize = 5;

fn verify(claim: Claim, n_max: usize) -> Result<VerdictTable> {
    if n_max > MAX_VERIFY_VERTICES {
        return Err(Error::TooLarge { size: n_max, limit: MAX_VERIFY_VERTICES });
    }
    Ok(VerdictTable::from_survey(claim, survey(n_max, SearchOptions::default())?))
}

pub fn verify_theorem1(n_max: usize) -> Result<VerdictTable> {
    verify(Claim::Theorem1, n_max)
}

pub fn verify_theorem2(n_max: usize) -> Result<VerdictTable> {
    verify(Claim::Theorem2, n_max)
}

pub fn verify_dress(n_max: usize) -> Result<VerdictTable> {
    verify(Claim::Dress, n_max)
}

#[cfg(test)]
impl RepresentationReport {
    fn with_nodes(mut self, nodes: u64) -> Self {
        self.nodes = nodes;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_labeled_graphs(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(connected_labeled_graphs(8).is_err());
    }

    #[test]
    fn triangle_has_one_representation() {
        let r = enumerate_representations(&Graph::complete(3)).unwrap();
        assert_eq!(r.count(), 1);
        assert!(r.representations()[0].is_empty());
    }

    #[test]
    fn star_has_one_representation() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = enumerate_representations(&star).unwrap();
        assert_eq!(r.count(), 1);
        assert_eq!(r, enumerate_representations_unpruned(&star).unwrap_or_else(|_| unreachable!()).with_nodes(r.nodes()));
    }

    #[test]
    fn square_has_several_representations() {
        let r = enumerate_representations(&Graph::cycle(4)).unwrap();
        assert!(r.count() >= 2);
        assert!(r.contains_graphic());
        assert!(r.bounds_below());
        assert!(!r.bounds_above());
        assert!(!r.is_uniquely_representable());
    }

    #[test]
    fn diamond_is_not_unique() {
        let r = enumerate_representations(&diamond()).unwrap();
        assert!(r.count() > 1);
    }

    #[test]
    fn trivial_sizes() {
        let r = enumerate_representations(&Graph::empty(1)).unwrap();
        assert_eq!(r.count(), 1);
        let r = enumerate_representations(&Graph::complete(2)).unwrap();
        assert_eq!(r.count(), 1);
        assert_eq!(enumerate_representations(&Graph::empty(3)), Err(Error::DisconnectedGraph));
        assert!(matches!(
            enumerate_representations(&Graph::complete(7)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let opts = SearchOptions { budget: Some(3) };
        assert_eq!(
            enumerate_representations_with(&Graph::path(5), opts),
            Err(Error::BudgetExceeded(3))
        );
    }

    #[test]
    fn four_permutations() {
        let all: BTreeSet<_> = permutations4([0, 1, 2, 3]).collect();
        assert_eq!(all.len(), 24);
    }
}
