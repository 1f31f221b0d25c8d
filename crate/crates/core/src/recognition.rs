//! Recognizers for the graph classes that characterise representability:
//! block graphs, chordal and diamond-free graphs, distance-hereditary graphs.
//!
//! Every negative answer comes with a [`Witness`] that can be re-checked
//! against the graph.

use serde::Serialize;

use crate::graph::{bits, full_mask, Graph, Path};
use crate::{Error, Result};

/// A certificate for a negative (or, for diamonds, positive) answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Witness {
    /// Vertex set of a block (maximal 2-connected subgraph) that is not a clique.
    NonCliqueBlock(Vec<usize>),
    /// An induced cycle with at least four vertices, in cycle order.
    InducedCycle(Vec<usize>),
    /// Four vertices inducing a 4-cycle with one chord.
    Diamond([usize; 4]),
    /// An induced path longer than the distance between its ends.
    NonGeodesicPath(Path),
}

impl Witness {
    /// Whether the certificate really shows what it claims in `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            Witness::NonCliqueBlock(vs) => {
                let mask = mask_of(vs);
                vs.len() >= 3
                    && vs.iter().all(|&v| v < g.n())
                    && g.is_connected_within(mask)
                    && !is_clique(g, mask)
                    && (0..vs.len()).all(|i| {
                        let without = mask & !(1 << vs[i]);
                        g.is_connected_within(without)
                    })
            }
            Witness::InducedCycle(vs) => is_induced_cycle(g, vs),
            Witness::Diamond(vs) => {
                let mask = mask_of(vs);
                mask.count_ones() == 4
                    && vs.iter().all(|&v| v < g.n())
                    && induced_edge_count(g, mask) == 5
            }
            Witness::NonGeodesicPath(p) => {
                p.is_induced_in(g)
                    && g.bfs_distances(p.first().expect("nonempty"))[p.last().expect("nonempty")]
                        .is_some_and(|d| d < p.len())
            }
        }
    }
}

/// Answer of a recognizer: whether the property holds, and a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Recognition {
    fn yes() -> Self {
        Recognition { holds: true, witness: None }
    }

    fn no(witness: Witness) -> Self {
        Recognition { holds: false, witness: Some(witness) }
    }
}

/// All four class memberships of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub is_block_graph: bool,
    pub is_chordal: bool,
    pub has_diamond: bool,
    pub is_distance_hereditary: bool,
    pub witnesses: Vec<Witness>,
}

pub fn classify(g: &Graph) -> Result<ClassReport> {
    let block = is_block_graph(g)?;
    let chordal = is_chordal(g);
    let diamond = find_diamond(g);
    let dh = is_distance_hereditary(g)?;
    let witnesses = [block.witness, chordal.witness, diamond.map(Witness::Diamond), dh.witness]
        .into_iter()
        .flatten()
        .collect();
    Ok(ClassReport {
        is_block_graph: block.holds,
        is_chordal: chordal.holds,
        has_diamond: diamond.is_some(),
        is_distance_hereditary: dh.holds,
        witnesses,
    })
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn is_clique(g: &Graph, mask: u64) -> bool {
    bits(mask).all(|v| g.neighbor_mask(v) & mask == mask & !(1 << v))
}

fn induced_edge_count(g: &Graph, mask: u64) -> u32 {
    bits(mask).map(|v| (g.neighbor_mask(v) & mask).count_ones()).sum::<u32>() / 2
}

fn is_induced_cycle(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    let mask = mask_of(vs);
    k >= 3
        && mask.count_ones() as usize == k
        && vs.iter().all(|&v| v < g.n())
        && (0..k).all(|i| {
            let v = vs[i];
            let expected = 1u64 << vs[(i + 1) % k] | 1u64 << vs[(i + k - 1) % k];
            g.neighbor_mask(v) & mask == expected
        })
}

/// Blocks (maximal 2-connected subgraphs and bridges) as vertex masks.
pub fn blocks(g: &Graph) -> Vec<u64> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<u64>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = 0u64;
                        while let Some((a, b)) = self.stack.pop() {
                            block |= 1 << a | 1 << b;
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let n = g.n();
    let mut dfs = Dfs { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            if g.degree(v) == 0 {
                dfs.out.push(1 << v);
            } else {
                dfs.visit(v, None);
            }
        }
    }
    dfs.out
}

/// Every block is a clique. The witness is a non-clique block.
pub fn is_block_graph(g: &Graph) -> Result<Recognition> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(match blocks(g).into_iter().find(|&b| !is_clique(g, b)) {
        Some(b) => Recognition::no(Witness::NonCliqueBlock(bits(b).collect())),
        None => Recognition::yes(),
    })
}

/// Maximum cardinality search order; reversing it gives a perfect
/// elimination ordering exactly when the graph is chordal.
fn maximum_cardinality_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        visited |= 1 << v;
        order.push(v);
        for u in bits(g.neighbor_mask(v) & !visited) {
            weight[u] += 1;
        }
    }
    order.reverse();
    order
}

/// Whether `order` is a perfect elimination ordering: the later neighbours
/// of each vertex form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut later = full_mask(g.n());
    order.iter().all(|&v| {
        later &= !(1 << v);
        is_clique(g, g.neighbor_mask(v) & later)
    })
}

/// Chordality via a perfect elimination ordering. The witness on failure
/// comes from [`find_long_induced_cycle`].
pub fn is_chordal(g: &Graph) -> Recognition {
    if is_perfect_elimination_ordering(g, &maximum_cardinality_order(g)) {
        Recognition::yes()
    } else {
        let cycle = find_long_induced_cycle(g).expect("non-chordal graphs have a long induced cycle");
        Recognition::no(Witness::InducedCycle(cycle))
    }
}

/// Naive search for an induced cycle on at least four vertices, grown as an
/// induced path from its smallest vertex.
pub fn find_long_induced_cycle(g: &Graph) -> Option<Vec<usize>> {
    fn grow(g: &Graph, start: usize, path: &mut Vec<usize>, mask: u64) -> bool {
        let last = *path.last().expect("nonempty");
        let inner = mask & !(1 << start) & !(1 << last);
        for w in bits(g.neighbor_mask(last) & !mask) {
            if w < start || g.neighbor_mask(w) & inner != 0 {
                continue;
            }
            let closes = g.has_edge(w, start);
            if closes && path.len() == 1 {
                // w is the second vertex, adjacent to start by construction
            } else if closes {
                if path.len() >= 3 {
                    path.push(w);
                    return true;
                }
                continue;
            }
            path.push(w);
            if grow(g, start, path, mask | 1 << w) {
                return true;
            }
            path.pop();
        }
        false
    }
    (0..g.n()).find_map(|s| {
        let mut path = vec![s];
        grow(g, s, &mut path, 1 << s).then_some(path)
    })
}

/// Cross-check for [`is_chordal`]: no induced cycle of length at least four.
pub fn is_chordal_naive(g: &Graph) -> bool {
    find_long_induced_cycle(g).is_none()
}

/// First 4-subset (lexicographically) inducing a diamond.
pub fn find_diamond(g: &Graph) -> Option<[usize; 4]> {
    four_subsets(g.n()).find(|&q| induced_edge_count(g, mask_of(&q)) == 5)
}

pub fn has_diamond(g: &Graph) -> Recognition {
    match find_diamond(g) {
        Some(q) => Recognition { holds: true, witness: Some(Witness::Diamond(q)) },
        None => Recognition { holds: false, witness: None },
    }
}

fn four_subsets(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d])))
    })
}

/// An induced 4-cycle or diamond, labelled so that `{x, y}` is a non-edge
/// and `{x, u}` an edge. For a 4-cycle the order is `x, u, y, v` around the
/// cycle; for a diamond `{u, v}` is the chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareFrame {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
    pub is_diamond: bool,
}

/// The first 4-subset in lexicographic order inducing a 4-cycle or a
/// diamond. `x` is the smallest vertex lying on a non-edge of the subgraph,
/// `y` its non-neighbour, and `u < v` the remaining two.
pub fn find_square_or_diamond(g: &Graph) -> Option<SquareFrame> {
    four_subsets(g.n()).find_map(|q| {
        let mask = mask_of(&q);
        let edges = induced_edge_count(g, mask);
        let degrees_two = q.iter().all(|&v| (g.neighbor_mask(v) & mask).count_ones() == 2);
        let is_diamond = edges == 5;
        if !(is_diamond || (edges == 4 && degrees_two)) {
            return None;
        }
        let (x, y) = q
            .iter()
            .flat_map(|&a| q.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| a < b && !g.has_edge(a, b))
            .expect("a 4-cycle or diamond has a non-edge");
        let mut rest = q.iter().copied().filter(|&w| w != x && w != y);
        let (u, v) = (rest.next()?, rest.next()?);
        Some(SquareFrame { x, y, u, v, is_diamond })
    })
}

/// All induced paths from `x` to `y`, in depth-first order.
pub fn induced_paths(g: &Graph, x: usize, y: usize) -> Result<Vec<Path>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::OutOfRange { index: v, n: g.n() });
        }
    }
    let mut out = Vec::new();
    for_each_induced_path_from(g, x, |path| {
        if *path.last().expect("nonempty") == y {
            out.push(Path::new(path.to_vec()));
            false
        } else {
            true
        }
    });
    Ok(out)
}

/// Calls `visit` on every induced path starting at `x` (including `[x]`).
/// Paths are only extended when `visit` returns true.
pub(crate) fn for_each_induced_path_from(g: &Graph, x: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn walk(g: &Graph, path: &mut Vec<usize>, mask: u64, visit: &mut dyn FnMut(&[usize]) -> bool) {
        if !visit(path) {
            return;
        }
        let last = *path.last().expect("nonempty");
        let earlier = mask & !(1 << last);
        for w in bits(g.neighbor_mask(last) & !mask) {
            if g.neighbor_mask(w) & earlier == 0 {
                path.push(w);
                walk(g, path, mask | 1 << w, visit);
                path.pop();
            }
        }
    }
    let mut path = vec![x];
    walk(g, &mut path, 1 << x, &mut visit);
}

/// The only induced `x`-`y` path, if there is exactly one.
pub fn unique_induced_path(g: &Graph, x: usize, y: usize) -> Result<Option<Path>> {
    let mut paths = induced_paths(g, x, y)?;
    Ok(if paths.len() == 1 { paths.pop() } else { None })
}

/// Every induced path is a geodesic. The witness is a violating path.
pub fn is_distance_hereditary(g: &Graph) -> Result<Recognition> {
    let dist = g.distance_matrix()?;
    for x in 0..g.n() {
        let mut bad = None;
        for_each_induced_path_from(g, x, |path| {
            if bad.is_some() {
                return false;
            }
            let last = *path.last().expect("nonempty");
            if dist[x][last] < path.len() - 1 {
                bad = Some(path.to_vec());
                return false;
            }
            true
        });
        if let Some(p) = bad {
            return Ok(Recognition::no(Witness::NonGeodesicPath(Path::new(p))));
        }
    }
    Ok(Recognition::yes())
}

/// Whether distances inside the induced subgraph on `vertices` agree with
/// distances in `g`.
pub fn is_isometric_subgraph(g: &Graph, vertices: &[usize]) -> Result<bool> {
    let sub = g.induced_subgraph(vertices)?;
    let inner = sub.distance_matrix().map_err(|_| Error::DisconnectedSubgraph)?;
    Ok(vertices.iter().enumerate().all(|(i, &a)| {
        let outer = g.bfs_distances(a);
        vertices.iter().enumerate().all(|(j, &b)| outer[b] == Some(inner[i][j]))
    }))
}

/// Whether `h`, a subgraph of `g` on `vertices` (vertex `i` of `h` is
/// `vertices[i]` in `g`), keeps the distances of `g`. Unlike
/// [`is_isometric_subgraph`], `h` need not be induced.
pub fn is_isometric(g: &Graph, h: &Graph, vertices: &[usize]) -> Result<bool> {
    if h.n() != vertices.len() {
        return Err(Error::SizeMismatch(h.n(), vertices.len()));
    }
    g.induced_subgraph(vertices)?;
    if let Some((a, b)) = h.edges().into_iter().find(|&(a, b)| !g.has_edge(vertices[a], vertices[b])) {
        return Err(Error::InvalidGraph(format!("{{{a}, {b}}} is not an edge of the ambient graph")));
    }
    let inner = h.distance_matrix().map_err(|_| Error::DisconnectedSubgraph)?;
    Ok(vertices.iter().enumerate().all(|(i, &a)| {
        let outer = g.bfs_distances(a);
        vertices.iter().enumerate().all(|(j, &b)| outer[b] == Some(inner[i][j]))
    }))
}
