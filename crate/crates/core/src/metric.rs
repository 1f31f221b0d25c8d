//! Finite metric spaces with exact rational distances.

use num_traits::{Signed, Zero};

use crate::graph::{Graph, WeightedGraph};
use crate::rational::{self, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricSpace {
    d: Vec<Vec<Rational>>,
}

impl MetricSpace {
    /// Validates the metric axioms, including every triangle inequality.
    pub fn new(d: Vec<Vec<Rational>>) -> Result<Self> {
        let n = d.len();
        if n == 0 {
            return Err(Error::InvalidMetric("no points".into()));
        }
        if let Some(row) = d.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidMetric(format!("row {row} has the wrong length")));
        }
        for x in 0..n {
            if !d[x][x].is_zero() {
                return Err(Error::InvalidMetric(format!("d({x},{x}) is not zero")));
            }
            for y in 0..n {
                if d[x][y] != d[y][x] {
                    return Err(Error::InvalidMetric(format!("d({x},{y}) != d({y},{x})")));
                }
                if x != y && !d[x][y].is_positive() {
                    return Err(Error::InvalidMetric(format!("d({x},{y}) is not positive")));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if d[x][z] > &d[x][y] + &d[y][z] {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails for ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(MetricSpace { d })
    }

    pub(crate) fn new_unchecked(d: Vec<Vec<Rational>>) -> Self {
        MetricSpace { d }
    }

    pub fn from_integers(d: &[Vec<i64>]) -> Result<Self> {
        MetricSpace::new(d.iter().map(|r| r.iter().map(|&v| rational::int(v)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn d(&self, x: usize, y: usize) -> &Rational {
        &self.d[x][y]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.d
    }

    /// Restriction to `points`, relabelled `0..k` in the given order.
    pub fn subspace(&self, points: &[usize]) -> Result<MetricSpace> {
        if points.is_empty() {
            return Err(Error::EmptySubset);
        }
        check_points(points, self.n())?;
        Ok(MetricSpace {
            d: points
                .iter()
                .map(|&x| points.iter().map(|&y| self.d[x][y].clone()).collect())
                .collect(),
        })
    }

    /// Every distance multiplied by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> MetricSpace {
        assert!(factor.is_positive());
        MetricSpace {
            d: self.d.iter().map(|r| r.iter().map(|v| v * factor).collect()).collect(),
        }
    }
}

pub(crate) fn check_points(points: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for &p in points {
        if p >= n {
            return Err(Error::OutOfRange { index: p, n });
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidGraph(format!("point {p} listed twice")));
        }
    }
    Ok(())
}

/// Hop-count metric of a connected graph.
pub fn graph_metric(g: &Graph) -> Result<MetricSpace> {
    let hops = g.distance_matrix()?;
    Ok(MetricSpace {
        d: hops
            .into_iter()
            .map(|r| r.into_iter().map(|v| rational::int(v as i64)).collect())
            .collect(),
    })
}

/// Shortest-path metric of a weighted graph (Dijkstra, exact arithmetic).
pub fn weighted_graph_metric(w: &WeightedGraph) -> Result<MetricSpace> {
    let n = w.n();
    let mut d = Vec::with_capacity(n);
    for source in 0..n {
        let row = dijkstra(w, source, None);
        d.push(
            row.into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or(Error::DisconnectedGraph)?,
        );
    }
    Ok(MetricSpace { d })
}

/// Single-source distances; the edge `skip`, when given, is ignored.
pub(crate) fn dijkstra(
    w: &WeightedGraph,
    source: usize,
    skip: Option<(usize, usize)>,
) -> Vec<Option<Rational>> {
    let n = w.n();
    let g = w.graph();
    let mut dist: Vec<Option<Rational>> = vec![None; n];
    let mut done = vec![false; n];
    dist[source] = Some(Rational::zero());
    loop {
        let next = (0..n)
            .filter(|&v| !done[v])
            .filter_map(|v| dist[v].as_ref().map(|dv| (v, dv)))
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(v, _)| v);
        let Some(u) = next else { break };
        done[u] = true;
        let du = dist[u].clone().expect("selected vertices are reached");
        for v in g.neighbors(u) {
            if done[v] || skip.is_some_and(|(a, b)| (a == u && b == v) || (a == v && b == u)) {
                continue;
            }
            let cand = &du + w.weight(u, v).expect("edge has a weight");
            if dist[v].as_ref().is_none_or(|dv| cand < *dv) {
                dist[v] = Some(cand);
            }
        }
    }
    dist
}
