//! The `betweenness` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a verification or construction check
//! fails (a certificate is printed), 2 on bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::constructions::{bipartite_family, lemma31_weighting, step2_weighting, ConstructionResult};
use crate::enumeration::{
    connected_labeled_graphs, enumerate_representations_with, survey, Claim, GraphSurvey, RepresentationReport,
    SearchOptions, VerdictTable, MAX_VERIFY_VERTICES,
};
use crate::geodesic::{check_prop24, structure_geodesics, weighted_geodesics, GeodesicSet};
use crate::graph::{Graph, Path, WeightedGraph};
use crate::io::{self, MetricSource, StructureJson};
use crate::metric::MetricSpace;
use crate::metrizability::is_metrizable;
use crate::rational;
use crate::recognition::classify;
use crate::structure::{
    adjacency_graph, betweenness_of_graph, betweenness_of_metric, betweenness_of_weighted, BetweennessStructure,
};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "betweenness", version, about = "Betweenness structures of finite metric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Size of the worker pool (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Betweenness structure of a graph, weighted graph or metric file.
    Betweenness {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Adjacency graph of a structure file.
    Adjacency {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Block, chordal, diamond and distance-hereditary tests on a graph.
    Classify {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Decide whether a structure comes from a metric.
    Metrizable {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// All representations of a graph.
    Representations {
        #[arg(long, short)]
        input: PathBuf,
        /// Search node budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Weighted graphs with prescribed representations.
    #[command(subcommand)]
    Construct(Construct),
    /// Exhaustive checks over all connected graphs up to a size.
    Verify {
        claim: VerifyClaim,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Geodesics between two points.
    Geodesics {
        /// Graph, weighted graph, metric or structure file.
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// Shrink the edges of a non-geodesic induced path.
    Lemma31 {
        #[arg(long, short)]
        input: PathBuf,
        /// Comma-separated vertices, e.g. `0,1,2,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        path: Vec<usize>,
        /// Path edge weight `p/q`, below 1/(path length).
        #[arg(long, value_parser = parse_rational)]
        eps: Option<rational::Rational>,
    },
    /// Weight 3/2 on one edge of a 4-cycle or diamond.
    Step2 {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// The 1/2-weighted family of the balanced complete bipartite graph.
    Bipartite {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyClaim {
    Theorem1,
    Theorem2,
    Dress,
    Prop24,
}

fn parse_rational(s: &str) -> std::result::Result<rational::Rational, String> {
    rational::parse(s).ok_or_else(|| format!("`{s}` is not a rational p/q"))
}

/// Failure modes, mapped to exit codes.
enum Failure {
    Input(String),
    Falsified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read(path: &FsPath) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &FsPath, r: crate::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn structure_text(b: &BetweennessStructure) -> String {
    let mut out = format!("{}\n", b.n());
    for [x, y, z] in b.triples() {
        writeln!(out, "{x} {y} {z}").unwrap();
    }
    out
}

fn structure_out(b: &BetweennessStructure, format: Format) -> String {
    match format {
        Format::Json => io::write_structure(b) + "\n",
        Format::Text => structure_text(b),
    }
}

fn metric_text(m: &MetricSpace) -> String {
    let mut out = format!("{}\n", m.n());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(rational::format).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}

fn weighted_json(w: &WeightedGraph) -> serde_json::Value {
    let edges: Vec<_> = w
        .weighted_edges()
        .map(|(u, v, x)| json!([u, v, rational::format(x)]))
        .collect();
    json!({ "n": w.n(), "edges": edges })
}

fn construction_out(r: &ConstructionResult, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({
            "weighted": weighted_json(&r.weighted),
            "structure": StructureJson::from(&r.structure),
            "claims": r.claims,
        })),
        Format::Text => {
            let mut out = String::new();
            for c in &r.claims {
                writeln!(out, "# {}: {}", c.claim, c.holds).unwrap();
            }
            out + &io::write_weighted_graph(&r.weighted)
        }
    }
}

fn check_claims(results: &[&ConstructionResult], rendered: String) -> Outcome {
    if results.iter().all(|r| r.all_claims_hold()) {
        Ok(rendered)
    } else {
        Err(Failure::Falsified(rendered))
    }
}

fn geodesics_out(set: &GeodesicSet, format: Format) -> String {
    match format {
        Format::Json => to_json(set),
        Format::Text => set
            .paths
            .iter()
            .map(|p| p.vertices().iter().map(usize::to_string).collect::<Vec<_>>().join(" ") + "\n")
            .collect(),
    }
}

fn report_text(r: &RepresentationReport) -> String {
    let mut out = String::new();
    writeln!(out, "count: {}", r.count()).unwrap();
    writeln!(out, "uniquely_representable: {}", r.is_uniquely_representable()).unwrap();
    writeln!(out, "bounds_below: {}", r.bounds_below()).unwrap();
    writeln!(out, "bounds_above: {}", r.bounds_above()).unwrap();
    for b in r.representations() {
        writeln!(out, "{}", io::write_structure(b)).unwrap();
    }
    out
}

fn edges_compact(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
}

fn survey_row(s: &GraphSurvey, holds: bool) -> serde_json::Value {
    let g = s.report.graph();
    json!({
        "n": g.n(),
        "edges": g.edges(),
        "count": s.report.count(),
        "block_graph": s.is_block_graph,
        "distance_hereditary": s.is_distance_hereditary,
        "bounds_below": s.report.bounds_below(),
        "bounds_above": s.report.bounds_above(),
        "holds": holds,
    })
}

/// Enough to replay a failure: the graph file and every representation.
fn certificate(g: &Graph, structures: &[BetweennessStructure], notes: &[String]) -> String {
    let mut out = String::from("counterexample\n--- graph\n");
    out += &io::write_graph(g);
    out += "--- structures\n";
    for b in structures {
        writeln!(out, "{}", io::write_structure(b)).unwrap();
    }
    for note in notes {
        writeln!(out, "# {note}").unwrap();
    }
    out
}

fn claim_name(claim: VerifyClaim) -> &'static str {
    match claim {
        VerifyClaim::Theorem1 => "theorem1",
        VerifyClaim::Theorem2 => "theorem2",
        VerifyClaim::Dress => "dress",
        VerifyClaim::Prop24 => "prop24",
    }
}

fn verify_table(claim: VerifyClaim, table: &VerdictTable, max_n: usize, format: Format) -> Outcome {
    let holds: Vec<bool> = table.rows.iter().map(|s| table.claim.holds_for(s)).collect();
    let mut out = match format {
        Format::Json => to_json(&json!({
            "claim": claim_name(claim),
            "max_n": max_n,
            "graphs": table.rows.len(),
            "counterexamples": table.counterexamples.len(),
            "rows": table.rows.iter().zip(&holds).map(|(s, &h)| survey_row(s, h)).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            for (s, h) in table.rows.iter().zip(&holds) {
                writeln!(
                    out,
                    "n={} edges={} count={} block={} dh={} below={} above={} {}",
                    s.report.graph().n(),
                    edges_compact(s.report.graph()),
                    s.report.count(),
                    s.is_block_graph,
                    s.is_distance_hereditary,
                    s.report.bounds_below(),
                    s.report.bounds_above(),
                    if *h { "ok" } else { "FAIL" }
                )
                .unwrap();
            }
            writeln!(
                out,
                "{}: {} graphs, {} counterexamples",
                claim_name(claim),
                table.rows.len(),
                table.counterexamples.len()
            )
            .unwrap();
            out
        }
    };
    match table.counterexamples.first() {
        None => Ok(out),
        Some(&i) => {
            let s = &table.rows[i];
            out += &certificate(s.report.graph(), s.report.representations(), &[]);
            Err(Failure::Falsified(out))
        }
    }
}

/// Geodesic properties on `B(g)` (with unit weights) and on every
/// representation of `g`, the latter compared pairwise.
fn verify_prop24(max_n: usize, options: SearchOptions, format: Format) -> Outcome {
    let mut lines = Vec::new();
    let mut checked = 0usize;
    for n in 1..=max_n {
        for g in connected_labeled_graphs(n)? {
            let report = enumerate_representations_with(&g, options)?;
            let reps = report.representations();
            let mut reports = vec![check_prop24(report.graphic(), Some(&WeightedGraph::unit(&g)?), reps)?];
            for b in reps {
                reports.push(check_prop24(b, None, reps)?);
            }
            checked += reports.len();
            let violations: Vec<String> = reports.iter().flat_map(|r| r.violations.clone()).collect();
            if !violations.is_empty() {
                let mut out = format!("prop24: violation on graph {}\n", edges_compact(&g));
                out += &certificate(&g, reps, &violations);
                return Err(Failure::Falsified(out));
            }
            lines.push((g, reps.len()));
        }
    }
    Ok(match format {
        Format::Json => to_json(&json!({
            "claim": "prop24",
            "max_n": max_n,
            "graphs": lines.len(),
            "structures_checked": checked,
            "counterexamples": 0,
        })),
        Format::Text => {
            let mut out = String::new();
            for (g, count) in &lines {
                writeln!(out, "n={} edges={} representations={count} ok", g.n(), edges_compact(g)).unwrap();
            }
            writeln!(out, "prop24: {} graphs, {checked} structures, 0 counterexamples", lines.len()).unwrap();
            out
        }
    })
}

fn structure_from_file(path: &FsPath) -> std::result::Result<BetweennessStructure, Failure> {
    in_file(path, io::parse_structure(&read(path)?))
}

fn graph_from_file(path: &FsPath) -> std::result::Result<Graph, Failure> {
    in_file(path, io::parse_graph(&read(path)?))
}

fn dispatch(command: Command, format: Option<Format>) -> Outcome {
    let json_default = format.unwrap_or(Format::Json);
    match command {
        Command::Betweenness { input } => {
            let b = match in_file(&input, io::parse_metric_source(&read(&input)?))? {
                MetricSource::Graph(g) => in_file(&input, betweenness_of_graph(&g))?,
                MetricSource::Weighted(w) => in_file(&input, betweenness_of_weighted(&w))?,
                MetricSource::Metric(m) => betweenness_of_metric(&m),
            };
            Ok(structure_out(&b, json_default))
        }
        Command::Adjacency { input } => {
            let g = adjacency_graph(&structure_from_file(&input)?);
            Ok(match format.unwrap_or(Format::Text) {
                Format::Text => io::write_graph(&g),
                Format::Json => to_json(&io::GraphJson::from(&g)),
            })
        }
        Command::Classify { input } => {
            let report = in_file(&input, classify(&graph_from_file(&input)?))?;
            Ok(match json_default {
                Format::Json => to_json(&report),
                Format::Text => format!(
                    "block_graph: {}\nchordal: {}\nhas_diamond: {}\ndistance_hereditary: {}\n",
                    report.is_block_graph, report.is_chordal, report.has_diamond, report.is_distance_hereditary
                ),
            })
        }
        Command::Metrizable { input } => {
            let b = structure_from_file(&input)?;
            Ok(match (is_metrizable(&b), json_default) {
                (None, _) => "no\n".to_string(),
                (Some(m), Format::Json) => io::write_metric(&m) + "\n",
                (Some(m), Format::Text) => metric_text(&m),
            })
        }
        Command::Representations { input, budget } => {
            let g = graph_from_file(&input)?;
            let report = enumerate_representations_with(&g, SearchOptions { budget })?;
            Ok(match json_default {
                Format::Json => io::write_report(&report) + "\n",
                Format::Text => report_text(&report),
            })
        }
        Command::Construct(c) => {
            let format = format.unwrap_or(Format::Text);
            match c {
                Construct::Lemma31 { input, path, eps } => {
                    let g = graph_from_file(&input)?;
                    let r = lemma31_weighting(&g, &Path::new(path), eps)?;
                    check_claims(&[&r], construction_out(&r, format))
                }
                Construct::Step2 { input } => {
                    let (r, _) = step2_weighting(&graph_from_file(&input)?)?;
                    check_claims(&[&r], construction_out(&r, format))
                }
                Construct::Bipartite { n } => {
                    let family = bipartite_family(n)?;
                    let rendered = match format {
                        Format::Json => to_json(
                            &family
                                .iter()
                                .map(|r| {
                                    json!({
                                        "weighted": weighted_json(&r.weighted),
                                        "structure": StructureJson::from(&r.structure),
                                        "claims": r.claims,
                                    })
                                })
                                .collect::<Vec<_>>(),
                        ),
                        Format::Text => family
                            .iter()
                            .enumerate()
                            .map(|(i, r)| format!("# member {i}\n{}", construction_out(r, Format::Text)))
                            .collect(),
                    };
                    check_claims(&family.iter().collect::<Vec<_>>(), rendered)
                }
            }
        }
        Command::Verify { claim, max_n, budget } => {
            if max_n > MAX_VERIFY_VERTICES {
                return Err(Error::TooLarge { size: max_n, limit: MAX_VERIFY_VERTICES }.into());
            }
            let options = SearchOptions { budget };
            let format = format.unwrap_or(Format::Text);
            let lib_claim = match claim {
                VerifyClaim::Theorem1 => Claim::Theorem1,
                VerifyClaim::Theorem2 => Claim::Theorem2,
                VerifyClaim::Dress => Claim::Dress,
                VerifyClaim::Prop24 => return verify_prop24(max_n, options, format),
            };
            let table = VerdictTable::from_survey(lib_claim, survey(max_n, options)?);
            verify_table(claim, &table, max_n, format)
        }
        Command::Geodesics { input, from, to } => {
            let text = read(&input)?;
            let is_structure = text.contains("\"triples\"");
            let set = if is_structure {
                let b = in_file(&input, io::parse_structure(&text))?;
                structure_geodesics(&b, from, to)?
            } else {
                match in_file(&input, io::parse_metric_source(&text))? {
                    MetricSource::Graph(g) => weighted_geodesics(&WeightedGraph::unit(&g)?, from, to)?,
                    MetricSource::Weighted(w) => weighted_geodesics(&w, from, to)?,
                    MetricSource::Metric(m) => structure_geodesics(&betweenness_of_metric(&m), from, to)?,
                }
            };
            Ok(geodesics_out(&set, json_default))
        }
    }
}

/// Runs the tool on `args` (including the program name), writing results to
/// `out` (unless `--output` is given) and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let Cli { command, common } = cli;
    let result = match common.workers {
        Some(0) => Err(Failure::Input("--workers must be positive".into())),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| dispatch(command, common.format)),
            Err(e) => Err(Failure::Input(e.to_string())),
        },
        None => dispatch(command, common.format),
    };
    let (text, code) = match result {
        Ok(text) => (text, 0),
        Err(Failure::Falsified(text)) => (text, 1),
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "error: {message}");
            return 2;
        }
    };
    let written = match &common.output {
        Some(path) => std::fs::write(path, &text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 2;
    }
    code
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
