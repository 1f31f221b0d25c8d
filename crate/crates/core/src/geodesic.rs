//! Geodesics in weighted graphs and in betweenness structures.
//!
//! In a weighted graph a geodesic is a minimum-weight path. In a betweenness
//! structure `B` it is an induced path of the adjacency graph `G(B)` whose
//! vertex set carries the ordered structure in path order.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::graph::{Graph, Path, WeightedGraph};
use crate::metric::dijkstra;
use crate::rational::Rational;
use crate::recognition::for_each_induced_path_from;
use crate::structure::{
    adjacency_graph, betweenness_of_graph, betweenness_of_weighted, is_extension, is_ordered,
    BetweennessStructure,
};
use crate::{Error, Result};

/// All geodesics between two fixed endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodesicSet {
    pub source: usize,
    pub target: usize,
    pub paths: Vec<Path>,
}

impl GeodesicSet {
    fn new(source: usize, target: usize, mut paths: Vec<Path>) -> Self {
        paths.sort();
        GeodesicSet { source, target, paths }
    }

    /// Whether some geodesic passes through `v`.
    pub fn covers(&self, v: usize) -> bool {
        self.paths.iter().any(|p| p.contains(v))
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::OutOfRange { index: v, n })
    } else {
        Ok(())
    }
}

/// Every minimum-weight `x`-`z` path of `w`.
///
/// Depth-first path enumeration, cutting a branch as soon as its weight plus
/// the remaining distance to `z` exceeds `d(x, z)`.
pub fn weighted_geodesics(w: &WeightedGraph, x: usize, z: usize) -> Result<GeodesicSet> {
    check_vertex(x, w.n())?;
    check_vertex(z, w.n())?;
    let to_target: Vec<Rational> = dijkstra(w, z, None)
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(Error::DisconnectedGraph)?;
    let best = to_target[x].clone();
    let mut paths = Vec::new();
    let mut path = vec![x];
    extend(w, z, &to_target, &best, &mut path, 1 << x, Rational::zero(), &mut paths);
    Ok(GeodesicSet::new(x, z, paths))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    w: &WeightedGraph,
    z: usize,
    to_target: &[Rational],
    best: &Rational,
    path: &mut Vec<usize>,
    mask: u64,
    weight: Rational,
    out: &mut Vec<Path>,
) {
    let last = *path.last().expect("nonempty");
    if last == z {
        if weight == *best {
            out.push(Path::new(path.clone()));
        }
        return;
    }
    for v in w.graph().neighbors(last) {
        if mask >> v & 1 == 1 {
            continue;
        }
        let next = &weight + w.weight(last, v).expect("edge");
        if &next + &to_target[v] > *best {
            continue;
        }
        path.push(v);
        extend(w, z, to_target, best, path, mask | 1 << v, next, out);
        path.pop();
    }
}

/// Geodesics of `b` between `x` and `z`: induced paths of `G(b)` that are
/// ordered in path order.
pub fn structure_geodesics(b: &BetweennessStructure, x: usize, z: usize) -> Result<GeodesicSet> {
    structure_geodesics_in(b, &adjacency_graph(b), x, z)
}

fn structure_geodesics_in(b: &BetweennessStructure, g: &Graph, x: usize, z: usize) -> Result<GeodesicSet> {
    check_vertex(x, b.n())?;
    check_vertex(z, b.n())?;
    let mut paths = Vec::new();
    for_each_induced_path_from(g, x, |p| {
        if !b.is_ordered_as(p) {
            // every prefix of a geodesic is ordered
            return false;
        }
        if *p.last().expect("nonempty") == z {
            paths.push(Path::new(p.to_vec()));
            return false;
        }
        true
    });
    Ok(GeodesicSet::new(x, z, paths))
}

/// Edges that are the unique geodesic between their ends.
pub fn tight_edges(w: &WeightedGraph) -> Vec<(usize, usize)> {
    w.weighted_edges()
        .filter(|&(u, v, weight)| match &dijkstra(w, u, Some((u, v)))[v] {
            Some(detour) => detour > weight,
            None => true,
        })
        .map(|(u, v, _)| (u, v))
        .collect()
}

pub fn is_tight(w: &WeightedGraph) -> bool {
    tight_edges(w).len() == w.graph().edge_count()
}

/// Inclusion-maximal ordered point sets of `b`, each listed in its order
/// (oriented with the smaller end first), sorted.
pub fn maximal_ordered_sets(b: &BetweennessStructure) -> Vec<Vec<usize>> {
    let n = b.n();
    assert!(n < 32, "subset enumeration is limited to small structures");
    let ordered = |mask: u32| -> Option<Vec<usize>> {
        let pts: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        is_ordered(b, &pts).expect("valid points")
    };
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let Some(seq) = ordered(mask) else { continue };
        // ordered sets are closed under taking subsets
        let maximal = (0..n)
            .filter(|&i| mask >> i & 1 == 0)
            .all(|i| ordered(mask | 1 << i).is_none());
        if maximal {
            out.push(seq);
        }
    }
    out.sort();
    out
}

/// Results of checking the six geodesic properties on one structure.
/// `None` marks a point that was not applicable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prop24Report {
    pub points: [Option<bool>; 6],
    pub violations: Vec<String>,
}

impl Prop24Report {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.unwrap_or(true))
    }
}

/// Checks, by enumeration:
///
/// 1. every geodesic `P` of `b` has `b|V(P) = B(P)`;
/// 2. every maximal ordered set induces a geodesic of `b` in `G(b)`;
/// 3. any two points are joined by a geodesic;
/// 4. (with `w`) the geodesics of `b` and of `w` coincide;
/// 5. `(x y z)` holds iff `y` lies on an `x`-`z` geodesic;
/// 6. for each `a` in `others` with `G(a) = G(b)`: `a ⪯ b` iff every
///    geodesic of `b` is a geodesic of `a`.
///
/// `w`, when given, must be tight and induce `b`.
pub fn check_prop24(
    b: &BetweennessStructure,
    w: Option<&WeightedGraph>,
    others: &[BetweennessStructure],
) -> Result<Prop24Report> {
    if let Some(w) = w {
        if !is_tight(w) {
            return Err(Error::NotTight);
        }
        if w.n() != b.n() || betweenness_of_weighted(w)? != *b {
            return Err(Error::StructureMismatch);
        }
    }
    let n = b.n();
    let g = adjacency_graph(b);
    let mut geodesics = Vec::with_capacity(n * n);
    for x in 0..n {
        for z in 0..n {
            geodesics.push(structure_geodesics_in(b, &g, x, z)?);
        }
    }
    let all_paths = || geodesics.iter().flat_map(|s| s.paths.iter());
    let mut violations = Vec::new();

    let mut p1 = true;
    for p in all_paths() {
        let restricted = b.substructure(p.vertices())?;
        if restricted != betweenness_of_graph(&Graph::path(p.vertices().len()))? {
            p1 = false;
            violations.push(format!("1: geodesic {:?} does not restrict to a path structure", p.vertices()));
        }
    }

    let mut p2 = true;
    for seq in maximal_ordered_sets(b) {
        let p = Path::new(seq);
        if !(p.is_induced_in(&g) && b.is_ordered_as(p.vertices())) {
            p2 = false;
            violations.push(format!("2: maximal ordered set {:?} is not a geodesic", p.vertices()));
        }
    }

    let mut p3 = true;
    for s in &geodesics {
        if s.paths.is_empty() {
            p3 = false;
            violations.push(format!("3: no geodesic between {} and {}", s.source, s.target));
        }
    }

    let p4 = match w {
        None => None,
        Some(w) => {
            let mut ok = true;
            for s in &geodesics {
                let weighted = weighted_geodesics(w, s.source, s.target)?;
                if weighted.paths != s.paths {
                    ok = false;
                    violations.push(format!(
                        "4: geodesics between {} and {} differ from the weighted graph's",
                        s.source, s.target
                    ));
                }
            }
            Some(ok)
        }
    };

    let mut p5 = true;
    for x in 0..n {
        for z in 0..n {
            for y in 0..n {
                if x == z || y == x || y == z {
                    continue;
                }
                if b.between(x, y, z) != geodesics[x * n + z].covers(y) {
                    p5 = false;
                    violations.push(format!("5: ({x} {y} {z}) disagrees with the geodesics"));
                }
            }
        }
    }

    let mut p6 = None;
    for a in others {
        if a.n() != n || adjacency_graph(a) != g {
            continue;
        }
        let extends = is_extension(a, b)?;
        let inherited = all_paths().all(|p| a.is_ordered_as(p.vertices()));
        let ok = extends == inherited;
        if !ok {
            violations.push(format!("6: extension and geodesic inclusion disagree for {:?}", a.triples()));
        }
        p6 = Some(p6.unwrap_or(true) && ok);
    }

    Ok(Prop24Report { points: [Some(p1), Some(p2), Some(p3), p4, Some(p5), p6], violations })
}

/// Convenience wrapper: the set of all geodesic paths of `b`.
pub fn all_structure_geodesics(b: &BetweennessStructure) -> BTreeSet<Path> {
    let g = adjacency_graph(b);
    let mut out = BTreeSet::new();
    for x in 0..b.n() {
        for z in 0..b.n() {
            out.extend(structure_geodesics_in(b, &g, x, z).expect("valid points").paths);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::structure::betweenness_of_graph;

    fn step2_c4() -> WeightedGraph {
        WeightedGraph::from_graph(&Graph::cycle(4), |u, v| if (u, v) == (0, 1) { ratio(3, 2) } else { int(1) })
            .unwrap()
    }

    fn paths(list: &[&[usize]]) -> Vec<Path> {
        list.iter().map(|p| Path::new(p.to_vec())).collect()
    }

    #[test]
    fn weighted_geodesic_sets() {
        let unit = WeightedGraph::unit(&Graph::cycle(4)).unwrap();
        assert_eq!(weighted_geodesics(&unit, 0, 2).unwrap().paths, paths(&[&[0, 1, 2], &[0, 3, 2]]));
        assert_eq!(weighted_geodesics(&step2_c4(), 0, 2).unwrap().paths, paths(&[&[0, 3, 2]]));
        assert_eq!(weighted_geodesics(&unit, 1, 1).unwrap().paths, paths(&[&[1]]));
    }

    #[test]
    fn structure_geodesic_sets() {
        let p4 = betweenness_of_graph(&Graph::path(4)).unwrap();
        assert_eq!(structure_geodesics(&p4, 0, 3).unwrap().paths, paths(&[&[0, 1, 2, 3]]));
        let c4 = betweenness_of_graph(&Graph::cycle(4)).unwrap();
        assert_eq!(structure_geodesics(&c4, 0, 2).unwrap().paths, paths(&[&[0, 1, 2], &[0, 3, 2]]));
        let w = betweenness_of_weighted(&step2_c4()).unwrap();
        assert_eq!(structure_geodesics(&w, 0, 2).unwrap().paths, paths(&[&[0, 3, 2]]));
    }

    #[test]
    fn tightness() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(3)] {
            assert!(is_tight(&WeightedGraph::unit(&g).unwrap()));
        }
        assert!(is_tight(&step2_c4()));
        // triangle with weights 1, 1, 2: the heavy edge ties with the detour
        let t = WeightedGraph::new(3, [(0, 1, int(1)), (1, 2, int(1)), (0, 2, int(2))]).unwrap();
        assert!(!is_tight(&t));
        assert_eq!(tight_edges(&t), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn maximal_ordered() {
        let p4 = betweenness_of_graph(&Graph::path(4)).unwrap();
        assert_eq!(maximal_ordered_sets(&p4), vec![vec![0, 1, 2, 3]]);
        let k3 = betweenness_of_graph(&Graph::complete(3)).unwrap();
        assert_eq!(maximal_ordered_sets(&k3), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let c4 = betweenness_of_graph(&Graph::cycle(4)).unwrap();
        assert_eq!(
            maximal_ordered_sets(&c4),
            vec![vec![0, 1, 2], vec![0, 3, 2], vec![1, 0, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn prop24_on_examples() {
        let w = step2_c4();
        let b = betweenness_of_weighted(&w).unwrap();
        let c4 = betweenness_of_graph(&Graph::cycle(4)).unwrap();
        let r = check_prop24(&b, Some(&w), std::slice::from_ref(&c4)).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.points, [Some(true); 6]);

        let r = check_prop24(&c4, Some(&WeightedGraph::unit(&Graph::cycle(4)).unwrap()), &[b]).unwrap();
        assert!(r.passed());

        let t = WeightedGraph::new(3, [(0, 1, int(1)), (1, 2, int(1)), (0, 2, int(2))]).unwrap();
        let bt = betweenness_of_weighted(&t).unwrap();
        assert_eq!(check_prop24(&bt, Some(&t), &[]), Err(Error::NotTight));
        assert_eq!(check_prop24(&c4, Some(&w), &[]), Err(Error::StructureMismatch));
    }
}
