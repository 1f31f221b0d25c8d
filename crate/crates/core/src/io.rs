//! File formats.
//!
//! * Graph: text, first line `n`, then one `u v` edge per line (0-based).
//! * Weighted graph: same, with `u v p/q` lines.
//! * Betweenness structure: JSON `{"n": 3, "triples": [[0, 1, 2]]}`.
//! * Metric space: JSON `{"n": 2, "d": [["0", "3/2"], ["3/2", "0"]]}`.
//!
//! Blank lines and lines starting with `#` are ignored in the text formats.
//! Writers always emit canonical order (sorted edges, sorted triples).

use serde::{Deserialize, Serialize};

use crate::enumeration::RepresentationReport;
use crate::graph::{Graph, WeightedGraph};
use crate::metric::MetricSpace;
use crate::rational::{self, Rational};
use crate::structure::{BetweennessStructure, Triple};
use crate::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Meaningful lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("{what} `{token}` is not a nonnegative integer")))
}

/// Line number and whitespace-separated fields of one edge line.
type Row<'a> = (usize, Vec<&'a str>);

/// Parses the vertex count line and the edge lines.
fn parse_edge_list(text: &str, arity: usize) -> Result<(usize, Vec<Row<'_>>)> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n = parse_index(header, first, "vertex count")?;
    let rows = lines
        .map(|(no, l)| {
            let tokens: Vec<&str> = l.split_whitespace().collect();
            if tokens.len() != arity {
                return Err(parse_err(no, format!("expected {arity} fields, found {}", tokens.len())));
            }
            Ok((no, tokens))
        })
        .collect::<Result<_>>()?;
    Ok((n, rows))
}

fn located<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        e @ Error::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, rows) = parse_edge_list(text, 2)?;
    let mut edges = Vec::with_capacity(rows.len());
    for (no, t) in &rows {
        let (u, v) = (parse_index(t[0], *no, "vertex")?, parse_index(t[1], *no, "vertex")?);
        // validate incrementally so the diagnostic names the offending line
        edges.push((u, v));
        located(*no, Graph::new(n.max(1), edges.iter().copied()).map(|_| ()))?;
    }
    located(1, Graph::new(n, edges))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_weighted_graph(text: &str) -> Result<WeightedGraph> {
    let (n, rows) = parse_edge_list(text, 3)?;
    let mut weights = Vec::with_capacity(rows.len());
    for (no, t) in &rows {
        let (u, v) = (parse_index(t[0], *no, "vertex")?, parse_index(t[1], *no, "vertex")?);
        let w = rational::parse(t[2]).ok_or_else(|| parse_err(*no, format!("weight `{}` is not p/q", t[2])))?;
        weights.push((u, v, w));
        located(*no, Graph::new(n.max(1), weights.iter().map(|(a, b, _)| (*a, *b))).map(|_| ()))?;
        if weights.last().is_some_and(|(_, _, w)| *w <= rational::zero()) {
            return Err(parse_err(*no, "weight must be positive"));
        }
    }
    located(1, WeightedGraph::new(n, weights))
}

pub fn write_weighted_graph(w: &WeightedGraph) -> String {
    let mut out = format!("{}\n", w.n());
    for (u, v, weight) in w.weighted_edges() {
        out.push_str(&format!("{u} {v} {}\n", rational::format(weight)));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureJson {
    pub n: usize,
    pub triples: Vec<Triple>,
}

impl From<&BetweennessStructure> for StructureJson {
    fn from(b: &BetweennessStructure) -> Self {
        StructureJson { n: b.n(), triples: b.triples().iter().copied().collect() }
    }
}

impl TryFrom<StructureJson> for BetweennessStructure {
    type Error = Error;

    fn try_from(j: StructureJson) -> Result<Self> {
        BetweennessStructure::new(j.n, j.triples)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricJson {
    pub n: usize,
    pub d: Vec<Vec<String>>,
}

impl From<&MetricSpace> for MetricJson {
    fn from(m: &MetricSpace) -> Self {
        MetricJson {
            n: m.n(),
            d: m.rows().iter().map(|r| r.iter().map(rational::format).collect()).collect(),
        }
    }
}

fn json_err(e: serde_json::Error) -> Error {
    parse_err(e.line(), e.to_string())
}

pub fn parse_structure(text: &str) -> Result<BetweennessStructure> {
    let j: StructureJson = serde_json::from_str(text).map_err(json_err)?;
    BetweennessStructure::try_from(j)
}

pub fn write_structure(b: &BetweennessStructure) -> String {
    serde_json::to_string(&StructureJson::from(b)).expect("serialisable")
}

pub fn parse_metric(text: &str) -> Result<MetricSpace> {
    let j: MetricJson = serde_json::from_str(text).map_err(json_err)?;
    if j.d.len() != j.n {
        return Err(Error::InvalidMetric(format!("n = {} but {} rows", j.n, j.d.len())));
    }
    let d: Vec<Vec<Rational>> = j
        .d
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|s| rational::parse(s).ok_or_else(|| Error::InvalidMetric(format!("row {i}: `{s}` is not p/q"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    MetricSpace::new(d)
}

pub fn write_metric(m: &MetricSpace) -> String {
    serde_json::to_string(&MetricJson::from(m)).expect("serialisable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub graph: GraphJson,
    pub count: usize,
    pub is_uniquely_representable: bool,
    pub bounds_below: bool,
    pub bounds_above: bool,
    pub representations: Vec<StructureJson>,
}

impl From<&RepresentationReport> for ReportJson {
    fn from(r: &RepresentationReport) -> Self {
        ReportJson {
            graph: r.graph().into(),
            count: r.count(),
            is_uniquely_representable: r.is_uniquely_representable(),
            bounds_below: r.bounds_below(),
            bounds_above: r.bounds_above(),
            representations: r.representations().iter().map(StructureJson::from).collect(),
        }
    }
}

pub fn write_report(r: &RepresentationReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("serialisable")
}

/// What a file given to `betweenness` turned out to contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricSource {
    Graph(Graph),
    Weighted(WeightedGraph),
    Metric(MetricSpace),
}

/// JSON input is a metric; text input with three fields per edge line is a
/// weighted graph, otherwise a graph.
pub fn parse_metric_source(text: &str) -> Result<MetricSource> {
    if text.trim_start().starts_with('{') {
        return parse_metric(text).map(MetricSource::Metric);
    }
    let weighted = content_lines(text).nth(1).is_some_and(|(_, l)| l.split_whitespace().count() == 3);
    if weighted {
        parse_weighted_graph(text).map(MetricSource::Weighted)
    } else {
        parse_graph(text).map(MetricSource::Graph)
    }
}
