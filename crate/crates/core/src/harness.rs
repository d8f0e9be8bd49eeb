//! Coloring verification, benchmark orchestration and report emission.
//!
//! Cells of a benchmark matrix run strictly one at a time so each
//! algorithm's own parallelism owns the machine. Timing covers the
//! computation only; parsing and CSR construction are excluded, and every
//! run is verified before its numbers are published.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::Error;
use crate::graph::{
    generate_rmat, parse_matrix_market, read_csr_cache, CsrGraph, DegreeStats, RmatParams,
};
use crate::greedy::{color_sequential, identity_order, Coloring, UNCOLORED};
use crate::independent_set::{jp_color, multihash_color, MultiHashConfig};
use crate::speculative::{color_data_driven, color_topology_driven, SpecConfig};
use crate::Result;

/// One improper edge or uncolored vertex found by the verifier.
///
/// Edge violations carry `v < w` and the shared color. An uncolored vertex
/// is reported with `w == v` and color 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub v: usize,
    pub w: usize,
    pub color: u32,
}

/// Checks that the coloring is complete and proper.
///
/// Returns the empty vector when valid; otherwise each violating edge is
/// reported exactly once (canonical `v < w`) plus one entry per uncolored
/// vertex, ordered by vertex id.
pub fn verify_coloring(g: &CsrGraph, coloring: &Coloring) -> Result<Vec<Violation>> {
    let n = g.num_vertices();
    if coloring.len() != n {
        return Err(Error::LengthMismatch {
            coloring_len: coloring.len(),
            num_vertices: n,
        });
    }
    let per_vertex: Vec<Vec<Violation>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut found = Vec::new();
            let cv = coloring.color(v);
            if cv == UNCOLORED {
                found.push(Violation { v, w: v, color: UNCOLORED });
            }
            for &w in g.neighbors(v) {
                if w > v && cv != UNCOLORED && coloring.color(w) == cv {
                    found.push(Violation { v, w, color: cv });
                }
            }
            found
        })
        .collect();
    Ok(per_vertex.into_iter().flatten().collect())
}

/// Highest assigned color id.
pub fn count_colors(coloring: &Coloring) -> u32 {
    coloring.num_colors()
}

/// Where a benchmark cell's graph comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    MatrixMarket(PathBuf),
    CsrCache(PathBuf),
    Rmat(RmatParams),
}

impl GraphSource {
    pub fn load(&self) -> Result<CsrGraph> {
        match self {
            GraphSource::MatrixMarket(path) => {
                let file = File::open(path).map_err(|e| Error::io(path, e))?;
                let list = parse_matrix_market(BufReader::new(file))?;
                CsrGraph::from_edge_list(&list.canonicalize())
            }
            GraphSource::CsrCache(path) => {
                let file = File::open(path).map_err(|e| Error::io(path, e))?;
                read_csr_cache(BufReader::new(file))
            }
            GraphSource::Rmat(params) => {
                let list = generate_rmat(params)?;
                CsrGraph::from_edge_list(&list.canonicalize())
            }
        }
    }

    pub fn default_name(&self) -> String {
        match self {
            GraphSource::MatrixMarket(path) | GraphSource::CsrCache(path) => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
            GraphSource::Rmat(p) => {
                let scale = p.num_vertices.trailing_zeros();
                format!("rmat-s{}-a{:.2}-seed{}", scale, p.a, p.seed)
            }
        }
    }

    /// Stable key for caching loaded graphs across cells.
    fn cache_key(&self) -> String {
        format!("{self:?}")
    }
}

/// Algorithm plus configuration for one benchmark cell.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgorithmSpec {
    Serial,
    Topology(SpecConfig),
    DataDriven(SpecConfig),
    JonesPlassmann { seed: u64 },
    MultiHash(MultiHashConfig),
}

impl AlgorithmSpec {
    pub fn id(&self) -> &'static str {
        match self {
            AlgorithmSpec::Serial => "serial",
            AlgorithmSpec::Topology(_) => "topo",
            AlgorithmSpec::DataDriven(_) => "data",
            AlgorithmSpec::JonesPlassmann { .. } => "jp",
            AlgorithmSpec::MultiHash(_) => "multihash",
        }
    }

    pub fn config_echo(&self) -> String {
        match self {
            AlgorithmSpec::Serial => "order=identity".to_string(),
            AlgorithmSpec::Topology(cfg) | AlgorithmSpec::DataDriven(cfg) => format!(
                "policy={:?} coarsening={} balance={:?} deterministic={}",
                cfg.policy, cfg.coarsening, cfg.balance, cfg.deterministic
            ),
            AlgorithmSpec::JonesPlassmann { .. } => "priorities=hash".to_string(),
            AlgorithmSpec::MultiHash(cfg) => format!("hashes={}", cfg.num_hashes),
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            AlgorithmSpec::Serial | AlgorithmSpec::Topology(_) | AlgorithmSpec::DataDriven(_) => 0,
            AlgorithmSpec::JonesPlassmann { seed } => *seed,
            AlgorithmSpec::MultiHash(cfg) => cfg.seed,
        }
    }

    pub fn workers(&self) -> usize {
        match self {
            AlgorithmSpec::Serial => 1,
            AlgorithmSpec::Topology(cfg) | AlgorithmSpec::DataDriven(cfg) => cfg.workers,
            // JP and multi-hash run on the ambient pool
            AlgorithmSpec::JonesPlassmann { .. } | AlgorithmSpec::MultiHash(_) => {
                rayon::current_num_threads()
            }
        }
    }
}

/// One benchmark cell: a graph, an algorithm, an optional display name.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchCell {
    pub name: Option<String>,
    pub graph: GraphSource,
    pub algorithm: AlgorithmSpec,
}

/// Per-run metrics record. One per cell; failed cells carry `valid =
/// false` and a cause instead of timings.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub graph: String,
    pub algorithm: String,
    pub config: String,
    pub num_colors: u32,
    pub iterations: usize,
    /// Mean wall time over repetitions, nanoseconds, computation only.
    pub total_ns: u64,
    /// Mean assignment-phase time (first-fit / set selection).
    pub assign_ns: u64,
    /// Mean conflict-resolution / compaction phase time.
    pub conflict_ns: u64,
    pub num_vertices: usize,
    pub num_edges: usize,
    pub degree_stats: Option<DegreeStats>,
    pub seed: u64,
    pub workers: usize,
    pub valid: bool,
    pub error: Option<String>,
}

struct RunOutcome {
    coloring: Coloring,
    iterations: usize,
    assign_ns: u64,
    conflict_ns: u64,
    total_ns: u64,
}

fn run_algorithm(alg: &AlgorithmSpec, g: &CsrGraph) -> Result<RunOutcome> {
    let start = Instant::now();
    let (coloring, iterations, assign_ns, conflict_ns) = match alg {
        AlgorithmSpec::Serial => {
            let coloring = color_sequential(g, &identity_order(g.num_vertices()))?;
            let elapsed = start.elapsed().as_nanos() as u64;
            (coloring, 1, elapsed, 0)
        }
        AlgorithmSpec::Topology(cfg) => {
            let (coloring, trace) = color_topology_driven(g, cfg)?;
            (
                coloring,
                trace.iterations(),
                trace.assign_time().as_nanos() as u64,
                trace.conflict_time().as_nanos() as u64,
            )
        }
        AlgorithmSpec::DataDriven(cfg) => {
            let (coloring, trace) = color_data_driven(g, cfg)?;
            (
                coloring,
                trace.iterations(),
                trace.assign_time().as_nanos() as u64,
                trace.conflict_time().as_nanos() as u64,
            )
        }
        AlgorithmSpec::JonesPlassmann { seed } => {
            let (coloring, trace) = jp_color(g, *seed)?;
            (
                coloring,
                trace.iterations(),
                trace.assign_time().as_nanos() as u64,
                trace.conflict_time().as_nanos() as u64,
            )
        }
        AlgorithmSpec::MultiHash(cfg) => {
            let (coloring, trace) = multihash_color(g, cfg)?;
            (
                coloring,
                trace.iterations(),
                trace.assign_time().as_nanos() as u64,
                trace.conflict_time().as_nanos() as u64,
            )
        }
    };
    Ok(RunOutcome {
        coloring,
        iterations,
        assign_ns,
        conflict_ns,
        total_ns: start.elapsed().as_nanos() as u64,
    })
}

/// Runs every cell `repetitions` times, verifying each run, and reports
/// the mean computation time. A failing cell (load error, run error or an
/// invalid coloring) is reported with its cause and the matrix continues.
pub fn run_benchmark(cells: &[BenchCell], repetitions: usize) -> Vec<RunReport> {
    run_benchmark_with(cells, repetitions, run_algorithm)
}

fn run_benchmark_with<F>(cells: &[BenchCell], repetitions: usize, runner: F) -> Vec<RunReport>
where
    F: Fn(&AlgorithmSpec, &CsrGraph) -> Result<RunOutcome>,
{
    let repetitions = repetitions.max(1);
    let mut graphs: HashMap<String, std::result::Result<CsrGraph, String>> = HashMap::new();
    let mut reports = Vec::with_capacity(cells.len());

    for cell in cells {
        let name = cell
            .name
            .clone()
            .unwrap_or_else(|| cell.graph.default_name());
        let mut report = RunReport {
            graph: name,
            algorithm: cell.algorithm.id().to_string(),
            config: cell.algorithm.config_echo(),
            num_colors: 0,
            iterations: 0,
            total_ns: 0,
            assign_ns: 0,
            conflict_ns: 0,
            num_vertices: 0,
            num_edges: 0,
            degree_stats: None,
            seed: cell.algorithm.seed(),
            workers: cell.algorithm.workers(),
            valid: false,
            error: None,
        };

        let key = cell.graph.cache_key();
        let loaded = graphs
            .entry(key)
            .or_insert_with(|| cell.graph.load().map_err(|e| e.to_string()));
        let graph = match loaded {
            Ok(g) => g,
            Err(cause) => {
                report.error = Some(format!("load failed: {cause}"));
                reports.push(report);
                continue;
            }
        };
        report.num_vertices = graph.num_vertices();
        report.num_edges = graph.num_edges();
        report.degree_stats = graph.degree_stats().ok();

        let mut total = 0u64;
        let mut assign = 0u64;
        let mut conflict = 0u64;
        let mut failed = None;
        for rep in 0..repetitions {
            match runner(&cell.algorithm, graph) {
                Ok(outcome) => {
                    match verify_coloring(graph, &outcome.coloring) {
                        Ok(violations) if violations.is_empty() => {}
                        Ok(violations) => {
                            failed = Some(format!(
                                "repetition {rep}: invalid coloring with {} violations",
                                violations.len()
                            ));
                            break;
                        }
                        Err(e) => {
                            failed = Some(format!("repetition {rep}: {e}"));
                            break;
                        }
                    }
                    total += outcome.total_ns;
                    assign += outcome.assign_ns;
                    conflict += outcome.conflict_ns;
                    report.num_colors = count_colors(&outcome.coloring);
                    report.iterations = outcome.iterations;
                }
                Err(e) => {
                    failed = Some(format!("repetition {rep}: {e}"));
                    break;
                }
            }
        }
        match failed {
            Some(cause) => report.error = Some(cause),
            None => {
                report.valid = true;
                let reps = repetitions as u64;
                report.total_ns = total / reps;
                report.assign_ns = assign / reps;
                report.conflict_ns = conflict / reps;
            }
        }
        reports.push(report);
    }
    reports
}

/// Output encodings for [`emit_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    JsonLines,
}

/// Field order shared by both encodings; documented in the README.
const REPORT_FIELDS: [&str; 18] = [
    "graph",
    "algorithm",
    "config",
    "num_colors",
    "iterations",
    "total_ns",
    "assign_ns",
    "conflict_ns",
    "num_vertices",
    "num_edges",
    "min_degree",
    "max_degree",
    "avg_degree",
    "degree_variance",
    "seed",
    "workers",
    "valid",
    "error",
];

/// Serializes reports with a stable field order and explicit float
/// precision; identical report lists produce identical bytes.
pub fn emit_report(reports: &[RunReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => emit_csv(reports),
        ReportFormat::JsonLines => emit_jsonl(reports),
    }
}

fn emit_csv(reports: &[RunReport]) -> String {
    let mut out = String::new();
    out.push_str(&REPORT_FIELDS.join(","));
    out.push('\n');
    for r in reports {
        let (min_d, max_d, avg_d, var_d) = match r.degree_stats {
            Some(s) => (
                s.min_degree.to_string(),
                s.max_degree.to_string(),
                format!("{:.6}", s.avg_degree),
                format!("{:.6}", s.degree_variance),
            ),
            None => (String::new(), String::new(), String::new(), String::new()),
        };
        let fields = [
            csv_escape(&r.graph),
            csv_escape(&r.algorithm),
            csv_escape(&r.config),
            r.num_colors.to_string(),
            r.iterations.to_string(),
            r.total_ns.to_string(),
            r.assign_ns.to_string(),
            r.conflict_ns.to_string(),
            r.num_vertices.to_string(),
            r.num_edges.to_string(),
            min_d,
            max_d,
            avg_d,
            var_d,
            r.seed.to_string(),
            r.workers.to_string(),
            r.valid.to_string(),
            csv_escape(r.error.as_deref().unwrap_or("")),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

fn emit_jsonl(reports: &[RunReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push('{');
        let _ = write!(
            out,
            "\"graph\":{},\"algorithm\":{},\"config\":{},\"num_colors\":{},\"iterations\":{},\
             \"total_ns\":{},\"assign_ns\":{},\"conflict_ns\":{},\"num_vertices\":{},\"num_edges\":{}",
            json_string(&r.graph),
            json_string(&r.algorithm),
            json_string(&r.config),
            r.num_colors,
            r.iterations,
            r.total_ns,
            r.assign_ns,
            r.conflict_ns,
            r.num_vertices,
            r.num_edges,
        );
        match r.degree_stats {
            Some(s) => {
                let _ = write!(
                    out,
                    ",\"min_degree\":{},\"max_degree\":{},\"avg_degree\":{:.6},\"degree_variance\":{:.6}",
                    s.min_degree, s.max_degree, s.avg_degree, s.degree_variance
                );
            }
            None => {
                out.push_str(
                    ",\"min_degree\":null,\"max_degree\":null,\"avg_degree\":null,\"degree_variance\":null",
                );
            }
        }
        let _ = write!(
            out,
            ",\"seed\":{},\"workers\":{},\"valid\":{}",
            r.seed, r.workers, r.valid
        );
        match &r.error {
            Some(e) => {
                let _ = write!(out, ",\"error\":{}", json_string(e));
            }
            None => out.push_str(",\"error\":null"),
        }
        out.push_str("}\n");
    }
    out
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Writes a report stream to a file.
pub fn write_report_file(reports: &[RunReport], format: ReportFormat, path: &PathBuf) -> Result<()> {
    use std::io::Write;
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    out.write_all(emit_report(reports, format).as_bytes())
        .map_err(|e| Error::io(path, e))?;
    Ok(())
}
