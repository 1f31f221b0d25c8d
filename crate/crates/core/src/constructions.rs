//! Weighted graphs that produce representations other than `B(G)`.
//!
//! Each generator returns the weighted graph, its betweenness structure and
//! the list of properties it is supposed to have, each checked by direct
//! computation at construction time.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::geodesic::{is_tight, weighted_geodesics};
use crate::graph::{Graph, Path, WeightedGraph};
use crate::rational::{self, Rational};
use crate::recognition::{find_square_or_diamond, is_block_graph, is_distance_hereditary, SquareFrame};
use crate::structure::{adjacency_graph, betweenness_of_graph, betweenness_of_weighted, is_extension, BetweennessStructure};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckedClaim {
    pub claim: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub weighted: WeightedGraph,
    pub structure: BetweennessStructure,
    pub claims: Vec<CheckedClaim>,
}

impl ConstructionResult {
    pub fn all_claims_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    fn claim(&mut self, claim: impl Into<String>, holds: bool) {
        self.claims.push(CheckedClaim { claim: claim.into(), holds });
    }
}

/// Weights the edges of `path` by `eps` and all others by 1.
///
/// `path` must be an induced path of `g` that is not a geodesic, and
/// `0 < eps < 1/|path|`; `eps` defaults to `1/(2|path|)`. The resulting
/// structure has `g` as adjacency graph but is incomparable with `B(g)`.
pub fn lemma31_weighting(g: &Graph, path: &Path, eps: Option<Rational>) -> Result<ConstructionResult> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if !path.is_induced_in(g) {
        return Err(Error::PathNotInduced);
    }
    let len = path.len();
    let (x, y) = (path.first().expect("nonempty"), path.last().expect("nonempty"));
    if g.bfs_distances(x)[y] == Some(len) {
        return Err(Error::PathIsGeodesic);
    }
    let bound = rational::ratio(1, len as i64);
    let eps = eps.unwrap_or_else(|| rational::ratio(1, 2 * len as i64));
    if eps <= rational::zero() || eps >= bound {
        return Err(Error::BadEpsilon(len));
    }
    let on_path: BTreeSet<(usize, usize)> = path
        .vertices()
        .windows(2)
        .map(|e| (e[0].min(e[1]), e[0].max(e[1])))
        .collect();
    let weighted = WeightedGraph::from_graph(g, |u, v| {
        if on_path.contains(&(u, v)) {
            eps.clone()
        } else {
            rational::one()
        }
    })?;
    let structure = betweenness_of_weighted(&weighted)?;
    let graphic = betweenness_of_graph(g)?;
    let mut result = ConstructionResult { weighted, structure, claims: Vec::new() };
    result.claim("W is tight", is_tight(&result.weighted));
    result.claim("G(B) = G", adjacency_graph(&result.structure) == *g);
    result.claim("B is not an extension of B(G)", !is_extension(&result.structure, &graphic)?);
    result.claim("B(G) is not an extension of B", !is_extension(&graphic, &result.structure)?);
    let geodesics = weighted_geodesics(&result.weighted, x, y)?;
    result.claim("the path is the unique geodesic between its ends", geodesics.paths == [path.clone()]);
    Ok(result)
}

/// Raises one edge of an induced 4-cycle or diamond to weight 3/2.
///
/// `g` must be connected, distance-hereditary and not a block graph. The
/// frame `x, y, u, v` comes from [`find_square_or_diamond`]; the edge
/// `{x, u}` gets weight 3/2 and every other edge weight 1.
pub fn step2_weighting(g: &Graph) -> Result<(ConstructionResult, SquareFrame)> {
    if is_block_graph(g)?.holds {
        return Err(Error::IsBlockGraph);
    }
    if !is_distance_hereditary(g)?.holds {
        return Err(Error::NotDistanceHereditary);
    }
    let frame = find_square_or_diamond(g).expect("a distance-hereditary non-block graph has a 4-cycle or diamond");
    let SquareFrame { x, y, u, .. } = frame;
    let heavy = (x.min(u), x.max(u));
    let weighted = WeightedGraph::from_graph(g, |a, b| {
        if (a, b) == heavy {
            rational::ratio(3, 2)
        } else {
            rational::one()
        }
    })?;
    let structure = betweenness_of_weighted(&weighted)?;
    let graphic = betweenness_of_graph(g)?;
    let mut result = ConstructionResult { weighted, structure, claims: Vec::new() };
    result.claim("W is tight", is_tight(&result.weighted));
    result.claim("G(B) = G", adjacency_graph(&result.structure) == *g);
    result.claim("(x u y) holds in B(G)", graphic.between(x, u, y));
    result.claim("(x u y) fails in B", !result.structure.between(x, u, y));
    result.claim("B differs from B(G)", result.structure != graphic);
    Ok((result, frame))
}

/// Number of free edges in [`bipartite_family`]: `⌊n/2⌋⌈n/2⌉ − n + 1`.
pub fn bipartite_free_edges(n: usize) -> usize {
    (n / 2) * n.div_ceil(2) + 1 - n
}

/// Representations of the balanced complete bipartite graph on `n ≥ 4`
/// vertices, classes `0..⌊n/2⌋` and `⌊n/2⌋..n`.
///
/// Edges touching vertex `0` or vertex `⌊n/2⌋` get weight 1; each other
/// edge independently gets 1 or 2. Result `i` uses weight 2 exactly on the
/// free edges whose bit is set in `i` (free edges in lexicographic order).
pub fn bipartite_family(n: usize) -> Result<Vec<ConstructionResult>> {
    if n < 4 {
        return Err(Error::TooSmall { size: n, min: 4 });
    }
    let a = n / 2;
    let g = Graph::complete_bipartite(a, n - a);
    let free: Vec<(usize, usize)> = g.edges().into_iter().filter(|&(u, v)| u != 0 && v != a).collect();
    debug_assert_eq!(free.len(), bipartite_free_edges(n));
    if free.len() >= 32 {
        return Err(Error::TooLarge { size: n, limit: 12 });
    }
    let mut family: Vec<ConstructionResult> = (0u64..1 << free.len())
        .into_par_iter()
        .map(|mask| {
            let weighted = WeightedGraph::from_graph(&g, |u, v| match free.iter().position(|&e| e == (u, v)) {
                Some(i) if mask >> i & 1 == 1 => rational::int(2),
                _ => rational::one(),
            })?;
            let structure = betweenness_of_weighted(&weighted)?;
            let mut result = ConstructionResult { weighted, structure, claims: Vec::new() };
            result.claim("W is tight", is_tight(&result.weighted));
            result.claim("G(B) = K", adjacency_graph(&result.structure) == g);
            Ok(result)
        })
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<&BetweennessStructure> = family.iter().map(|r| &r.structure).collect();
    let all_distinct = distinct.len() == family.len();
    for r in &mut family {
        r.claim("structures are pairwise distinct", all_distinct);
    }
    Ok(family)
}
