//! Betweenness structures and the maps from metrics and graphs into them.
//!
//! A structure on `n` points stores only its nontrivial triples, each in
//! canonical form `[x, y, z]` with `x < z` meaning "y lies between x and z".
//! The reversed triple and the trivial betweennesses `(x x z)` are implied
//! and never stored. Trichotomy holds for every value of the type: each
//! 3-subset of points has at most one middle.

use std::collections::BTreeSet;

use crate::graph::{Graph, WeightedGraph};
use crate::metric::{self, check_points, MetricSpace};
use crate::{Error, Result};

/// `[x, y, z]` with `x < z`, all distinct: `y` is between `x` and `z`.
pub type Triple = [usize; 3];

pub fn canonical(x: usize, y: usize, z: usize) -> Triple {
    if x < z {
        [x, y, z]
    } else {
        [z, y, x]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetweennessStructure {
    n: usize,
    triples: BTreeSet<Triple>,
}

impl BetweennessStructure {
    /// Canonicalises raw triples and checks them.
    ///
    /// Fails with [`Error::DegenerateTriple`] on repeated points and with
    /// [`Error::TrichotomyViolation`] when two different middles are given
    /// for the same three points.
    pub fn new(n: usize, raw: impl IntoIterator<Item = Triple>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySubset);
        }
        let mut triples = BTreeSet::new();
        for [x, y, z] in raw {
            for index in [x, y, z] {
                if index >= n {
                    return Err(Error::OutOfRange { index, n });
                }
            }
            if x == y || y == z || x == z {
                return Err(Error::DegenerateTriple(x, y, z));
            }
            triples.insert(canonical(x, y, z));
        }
        let b = BetweennessStructure { n, triples };
        for &[x, y, z] in &b.triples {
            let middles = [(x, y, z), (y, z, x), (z, x, y)]
                .into_iter()
                .filter(|&(p, m, q)| b.triples.contains(&canonical(p, m, q)))
                .count();
            if middles > 1 {
                let mut s = [x, y, z];
                s.sort_unstable();
                return Err(Error::TrichotomyViolation(s[0], s[1], s[2]));
            }
        }
        Ok(b)
    }

    pub(crate) fn from_canonical_unchecked(n: usize, triples: BTreeSet<Triple>) -> Self {
        BetweennessStructure { n, triples }
    }

    /// The structure with no collinear triples.
    pub fn empty(n: usize) -> Self {
        assert!(n > 0);
        BetweennessStructure { n, triples: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &BTreeSet<Triple> {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// The full relation `(x y z)`, trivial betweennesses included.
    pub fn between(&self, x: usize, y: usize, z: usize) -> bool {
        if y == x || y == z {
            return true;
        }
        x != z && self.triples.contains(&canonical(x, y, z))
    }

    /// The middle point of the distinct points `a, b, c`, if they are collinear.
    pub fn middle(&self, a: usize, b: usize, c: usize) -> Option<usize> {
        [(a, b, c), (b, c, a), (c, a, b)]
            .into_iter()
            .find(|&(x, y, z)| self.triples.contains(&canonical(x, y, z)))
            .map(|(_, y, _)| y)
    }

    /// Restriction to `points`, relabelled `0..k` in the given order.
    pub fn substructure(&self, points: &[usize]) -> Result<BetweennessStructure> {
        if points.is_empty() {
            return Err(Error::EmptySubset);
        }
        check_points(points, self.n)?;
        let mut triples = BTreeSet::new();
        for (i, &x) in points.iter().enumerate() {
            for (k, &z) in points.iter().enumerate().skip(i + 1) {
                for (j, &y) in points.iter().enumerate() {
                    if j != i && j != k && self.triples.contains(&canonical(x, y, z)) {
                        triples.insert([i, j, k]);
                    }
                }
            }
        }
        Ok(BetweennessStructure { n: points.len(), triples })
    }

    /// Whether the restriction to `seq` is the ordered structure
    /// `[seq[0], ..., seq[l-1]]`: every `(seq[i] seq[j] seq[k])` with
    /// `i < j < k` holds (trichotomy excludes every other triple).
    pub fn is_ordered_as(&self, seq: &[usize]) -> bool {
        let l = seq.len();
        (0..l).all(|i| {
            (i + 1..l).all(|j| (j + 1..l).all(|k| self.between(seq[i], seq[j], seq[k])))
        })
    }
}

/// `B(M)`: all distinct triples with `d(x, z) = d(x, y) + d(y, z)`.
pub fn betweenness_of_metric(m: &MetricSpace) -> BetweennessStructure {
    let n = m.n();
    let mut triples = BTreeSet::new();
    for x in 0..n {
        for z in x + 1..n {
            for y in (0..n).filter(|&y| y != x && y != z) {
                if *m.d(x, z) == m.d(x, y) + m.d(y, z) {
                    triples.insert([x, y, z]);
                }
            }
        }
    }
    BetweennessStructure { n, triples }
}

/// `B(G)`, computed from hop distances directly.
pub fn betweenness_of_graph(g: &Graph) -> Result<BetweennessStructure> {
    let d = g.distance_matrix()?;
    let n = g.n();
    let mut triples = BTreeSet::new();
    for x in 0..n {
        for z in x + 1..n {
            for y in (0..n).filter(|&y| y != x && y != z) {
                if d[x][z] == d[x][y] + d[y][z] {
                    triples.insert([x, y, z]);
                }
            }
        }
    }
    Ok(BetweennessStructure { n, triples })
}

pub fn betweenness_of_weighted(w: &WeightedGraph) -> Result<BetweennessStructure> {
    Ok(betweenness_of_metric(&metric::weighted_graph_metric(w)?))
}

/// `G(B)`: `{x, z}` is an edge iff no third point lies between them.
pub fn adjacency_graph(b: &BetweennessStructure) -> Graph {
    let mut g = Graph::complete(b.n);
    for &[x, _, z] in &b.triples {
        if g.has_edge(x, z) {
            g.remove_edge(x, z);
        }
    }
    g
}

/// `A ⪯ B`, i.e. the triples of `a` contain those of `b`.
pub fn is_extension(a: &BetweennessStructure, b: &BetweennessStructure) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(a.n, b.n));
    }
    Ok(a.triples.is_superset(&b.triples))
}

/// Finds `y_1, ..., y_l` with `B|_Y = [y_1, ..., y_l]`, oriented so that
/// `y_1 < y_l`. Sets of at most two points are always ordered.
///
/// An endpoint is a point of `Y` that is not the middle of any triple in
/// `Y`; the other points are ranked by how many points of `Y` lie beyond
/// them as seen from that endpoint.
pub fn is_ordered(b: &BetweennessStructure, points: &[usize]) -> Result<Option<Vec<usize>>> {
    if points.is_empty() {
        return Err(Error::EmptySubset);
    }
    check_points(points, b.n)?;
    let mut ys = points.to_vec();
    ys.sort_unstable();
    if ys.len() <= 2 {
        return Ok(Some(ys));
    }
    let is_middle = |y: usize| {
        ys.iter().any(|&x| {
            x != y && ys.iter().any(|&z| z != y && z > x && b.between(x, y, z))
        })
    };
    for &end in ys.iter().filter(|&&y| !is_middle(y)) {
        let mut rest: Vec<(usize, usize)> = ys
            .iter()
            .filter(|&&y| y != end)
            .map(|&y| {
                let beyond = ys
                    .iter()
                    .filter(|&&z| z != end && z != y && b.between(end, y, z))
                    .count();
                (beyond, y)
            })
            .collect();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(ys.len());
        seq.push(end);
        seq.extend(rest.into_iter().map(|(_, y)| y));
        if b.is_ordered_as(&seq) {
            if seq[0] > seq[seq.len() - 1] {
                seq.reverse();
            }
            return Ok(Some(seq));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn step2_c4() -> WeightedGraph {
        // x=0, u=1, y=2, v=3; w(xu) = 3/2
        WeightedGraph::from_graph(&Graph::cycle(4), |u, v| {
            if (u, v) == (0, 1) {
                ratio(3, 2)
            } else {
                int(1)
            }
        })
        .unwrap()
    }

    fn set(ts: &[Triple]) -> BTreeSet<Triple> {
        ts.iter().copied().collect()
    }

    #[test]
    fn canonicalisation_and_validation() {
        let b = BetweennessStructure::new(3, [[2, 1, 0]]).unwrap();
        assert_eq!(b.triples(), &set(&[[0, 1, 2]]));
        assert_eq!(
            BetweennessStructure::new(3, [[0, 1, 2], [0, 2, 1]]),
            Err(Error::TrichotomyViolation(0, 1, 2))
        );
        assert_eq!(
            BetweennessStructure::new(3, [[0, 0, 1]]),
            Err(Error::DegenerateTriple(0, 0, 1))
        );
        assert!(BetweennessStructure::new(3, [[0, 1, 3]]).is_err());
    }

    #[test]
    fn between_includes_trivial() {
        let b = BetweennessStructure::new(3, [[0, 1, 2]]).unwrap();
        assert!(b.between(0, 0, 2));
        assert!(b.between(2, 1, 0));
        assert!(!b.between(1, 0, 2));
        assert!(!b.between(0, 1, 0));
        assert_eq!(b.middle(2, 0, 1), Some(1));
    }

    #[test]
    fn betweenness_of_small_metrics() {
        let p3 = betweenness_of_graph(&Graph::path(3)).unwrap();
        assert_eq!(p3.triples(), &set(&[[0, 1, 2]]));
        assert!(betweenness_of_graph(&Graph::complete(3)).unwrap().is_empty());
        for n in 2..6 {
            assert!(betweenness_of_graph(&Graph::complete(n)).unwrap().is_empty());
        }
        let c4 = betweenness_of_graph(&Graph::cycle(4)).unwrap();
        assert_eq!(c4.triples(), &set(&[[0, 1, 2], [0, 3, 2], [1, 0, 3], [1, 2, 3]]));

        let w = betweenness_of_weighted(&step2_c4()).unwrap();
        assert!(w.between(0, 3, 2));
        assert!(w.between(1, 2, 3));
        assert!(!w.between(0, 1, 2));

        // tree: star with centre 0 plus a pendant 4 on leaf 1
        let tree = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
        let bt = betweenness_of_graph(&tree).unwrap();
        assert!(bt.between(4, 0, 3));
        assert!(bt.between(4, 1, 2));
        assert!(!bt.between(2, 1, 3));
        assert_eq!(betweenness_of_graph(&Graph::empty(2)), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn adjacency_graphs() {
        let b = BetweennessStructure::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(adjacency_graph(&b), Graph::path(3));
        assert_eq!(adjacency_graph(&BetweennessStructure::empty(4)), Graph::complete(4));
        let w = betweenness_of_weighted(&step2_c4()).unwrap();
        assert_eq!(adjacency_graph(&w), Graph::cycle(4));
    }

    #[test]
    fn substructures() {
        let p4 = betweenness_of_graph(&Graph::path(4)).unwrap();
        assert_eq!(p4.substructure(&[0, 1, 2]).unwrap().triples(), &set(&[[0, 1, 2]]));
        let single = p4.substructure(&[2]).unwrap();
        assert_eq!((single.n(), single.len()), (1, 0));
        let c4 = betweenness_of_graph(&Graph::cycle(4)).unwrap();
        assert_eq!(c4.substructure(&[0, 1, 2]).unwrap().triples(), &set(&[[0, 1, 2]]));
        assert_eq!(p4.substructure(&[]), Err(Error::EmptySubset));
    }

    #[test]
    fn extensions() {
        let c4 = betweenness_of_graph(&Graph::cycle(4)).unwrap();
        let w = betweenness_of_weighted(&step2_c4()).unwrap();
        assert!(is_extension(&c4, &w).unwrap());
        assert!(!is_extension(&w, &c4).unwrap());
        assert!(is_extension(&c4, &c4).unwrap());
        let p3 = BetweennessStructure::new(3, [[0, 1, 2]]).unwrap();
        assert!(!is_extension(&BetweennessStructure::empty(3), &p3).unwrap());
        assert_eq!(is_extension(&p3, &c4), Err(Error::SizeMismatch(3, 4)));
    }

    #[test]
    fn orderings() {
        let p4 = betweenness_of_graph(&Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap()).unwrap();
        assert_eq!(is_ordered(&p4, &[0, 1, 2, 3]).unwrap(), Some(vec![1, 3, 0, 2]));
        let k3 = betweenness_of_graph(&Graph::complete(3)).unwrap();
        assert_eq!(is_ordered(&k3, &[0, 1, 2]).unwrap(), None);
        assert_eq!(is_ordered(&k3, &[2, 1]).unwrap(), Some(vec![1, 2]));
        let c4 = betweenness_of_graph(&Graph::cycle(4)).unwrap();
        assert_eq!(is_ordered(&c4, &[0, 1, 2]).unwrap(), Some(vec![0, 1, 2]));
        assert_eq!(is_ordered(&c4, &[0, 1, 2, 3]).unwrap(), None);
        assert_eq!(is_ordered(&c4, &[]), Err(Error::EmptySubset));
    }
}
