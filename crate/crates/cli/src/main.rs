//! `parcolor` command-line frontend.
//!
//! Subcommands: `generate` (R-MAT to Matrix Market), `color` (run one
//! algorithm, write a coloring file), `verify` (check a coloring file),
//! `stats` (degree statistics) and `bench` (run a benchmark manifest).
//!
//! Exit codes: 0 success, 1 operational failure (invalid coloring, failed
//! benchmark cell), 2 usage or input error.

mod manifest;

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use parcolor_core::graph::{
    generate_rmat, parse_matrix_market, read_csr_cache, write_csr_cache, write_matrix_market,
    CsrGraph, RmatParams,
};
use parcolor_core::greedy::{color_sequential, identity_order, Coloring};
use parcolor_core::harness::{
    count_colors, emit_report, run_benchmark, verify_coloring, ReportFormat,
};
use parcolor_core::independent_set::{jp_color, multihash_color, MultiHashConfig};
use parcolor_core::speculative::{
    color_data_driven, color_topology_driven, BalanceMode, ConflictPolicy, SpecConfig,
};

#[derive(Parser)]
#[command(
    name = "parcolor",
    version,
    about = "Parallel graph vertex coloring toolkit",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an R-MAT graph and write it as a Matrix Market file
    Generate(GenerateArgs),
    /// Color a graph with the chosen algorithm and write the colors
    Color(ColorArgs),
    /// Verify a coloring file against its graph
    Verify(VerifyArgs),
    /// Print vertex, edge and degree statistics for a graph
    Stats(StatsArgs),
    /// Run a benchmark manifest and emit one report per cell
    Bench(BenchArgs),
}

#[derive(clap::Args)]
struct GenerateArgs {
    /// R-MAT quadrant probabilities a,b,c,d (must sum to 1)
    #[arg(long, value_name = "A,B,C,D", default_value = "0.25,0.25,0.25,0.25")]
    rmat: String,
    /// log2 of the vertex count
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=31))]
    scale: u32,
    /// Target average degree (directed adjacency entries per vertex)
    #[arg(long, default_value_t = 10.0, conflicts_with = "edges")]
    avg_degree: f64,
    /// Exact number of distinct undirected edges (overrides --avg-degree)
    #[arg(long)]
    edges: Option<usize>,
    /// Generator seed
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output Matrix Market file
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    /// Also write a binary CSR cache next to the Matrix Market file
    #[arg(long, value_name = "FILE")]
    csr_cache: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Serial,
    Topo,
    Data,
    Jp,
    Multihash,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    /// smaller vertex id loses the conflict
    Id,
    /// smaller degree loses the conflict
    Degree,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BalanceArg {
    Uniform,
    Edge,
}

#[derive(clap::Args)]
struct ColorArgs {
    /// Input graph (.pcsr loads the binary cache, anything else parses as
    /// Matrix Market)
    graph: PathBuf,
    /// Coloring algorithm
    #[arg(long, value_enum)]
    algo: AlgoArg,
    /// Conflict resolution policy for topo/data
    #[arg(long, value_enum, default_value_t = PolicyArg::Id)]
    policy: PolicyArg,
    /// Seed for jp/multihash
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads (default: machine parallelism)
    #[arg(long)]
    workers: Option<usize>,
    /// Vertices per work chunk for topo/data
    #[arg(long, default_value_t = 128)]
    coarsening: usize,
    /// Chunking mode for topo/data
    #[arg(long, value_enum, default_value_t = BalanceArg::Uniform)]
    balance: BalanceArg,
    /// Snapshot reads: bit-reproducible runs at some speed cost
    #[arg(long)]
    deterministic: bool,
    /// Hash functions per round for multihash
    #[arg(long, default_value_t = 2)]
    hashes: usize,
    /// Output coloring file (one color per line)
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Input graph
    graph: PathBuf,
    /// Coloring file produced by `parcolor color`
    coloring: PathBuf,
}

#[derive(clap::Args)]
struct StatsArgs {
    /// Input graph
    graph: PathBuf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
}

#[derive(clap::Args)]
struct BenchArgs {
    /// JSON benchmark manifest (see README for the schema)
    manifest: PathBuf,
    /// Report encoding
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write reports to a file instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Color(args) => cmd_color(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &Path) -> anyhow::Result<CsrGraph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let reader = BufReader::new(file);
    let graph = if path.extension().is_some_and(|e| e == "pcsr") {
        read_csr_cache(reader).with_context(|| format!("loading {}", path.display()))?
    } else {
        let list =
            parse_matrix_market(reader).with_context(|| format!("parsing {}", path.display()))?;
        CsrGraph::from_edge_list(&list.canonicalize())
            .with_context(|| format!("building CSR from {}", path.display()))?
    };
    Ok(graph)
}

fn parse_rmat_probabilities(spec: &str) -> anyhow::Result<[f64; 4]> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 4 {
        bail!("--rmat expects four comma-separated probabilities, got `{spec}`");
    }
    let mut ps = [0.0f64; 4];
    for (slot, part) in ps.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .with_context(|| format!("`{part}` is not a number"))?;
    }
    Ok(ps)
}

fn cmd_generate(args: GenerateArgs) -> anyhow::Result<ExitCode> {
    let [a, b, c, d] = parse_rmat_probabilities(&args.rmat)?;
    let num_vertices = 1usize << args.scale;
    let num_undirected_edges = match args.edges {
        Some(m) => m,
        None => ((num_vertices as f64) * args.avg_degree / 2.0).round() as usize,
    };
    let params = RmatParams {
        a,
        b,
        c,
        d,
        num_vertices,
        num_undirected_edges,
        seed: args.seed,
    };
    let list = generate_rmat(&params)?;
    let graph = CsrGraph::from_edge_list(&list.canonicalize())?;

    let out = File::create(&args.out)
        .with_context(|| format!("cannot create {}", args.out.display()))?;
    write_matrix_market(&graph, BufWriter::new(out))
        .with_context(|| format!("writing {}", args.out.display()))?;

    if let Some(cache_path) = &args.csr_cache {
        let out = File::create(cache_path)
            .with_context(|| format!("cannot create {}", cache_path.display()))?;
        write_csr_cache(&graph, BufWriter::new(out))
            .with_context(|| format!("writing {}", cache_path.display()))?;
    }

    let stats = graph.degree_stats()?;
    println!(
        "wrote {}: n={} m={} avg_degree={:.2} degree_variance={:.2}",
        args.out.display(),
        graph.num_vertices(),
        graph.num_edges(),
        stats.avg_degree,
        stats.degree_variance
    );
    Ok(ExitCode::SUCCESS)
}

fn spec_config(args: &ColorArgs) -> SpecConfig {
    SpecConfig {
        policy: match args.policy {
            PolicyArg::Id => ConflictPolicy::BaselineId,
            PolicyArg::Degree => ConflictPolicy::DegreeHeuristic,
        },
        coarsening: args.coarsening,
        balance: match args.balance {
            BalanceArg::Uniform => BalanceMode::Uniform,
            BalanceArg::Edge => BalanceMode::EdgeBalanced,
        },
        workers: args.workers.unwrap_or_else(default_workers),
        deterministic: args.deterministic,
        max_iterations: None,
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

fn algo_id(algo: AlgoArg) -> &'static str {
    match algo {
        AlgoArg::Serial => "serial",
        AlgoArg::Topo => "topo",
        AlgoArg::Data => "data",
        AlgoArg::Jp => "jp",
        AlgoArg::Multihash => "multihash",
    }
}

fn cmd_color(args: ColorArgs) -> anyhow::Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let started = Instant::now();
    let (coloring, iterations) = match args.algo {
        AlgoArg::Serial => {
            let coloring = color_sequential(&graph, &identity_order(graph.num_vertices()))?;
            (coloring, 1)
        }
        AlgoArg::Topo => {
            let (coloring, trace) = color_topology_driven(&graph, &spec_config(&args))?;
            (coloring, trace.iterations())
        }
        AlgoArg::Data => {
            let (coloring, trace) = color_data_driven(&graph, &spec_config(&args))?;
            (coloring, trace.iterations())
        }
        AlgoArg::Jp => {
            let (coloring, trace) = jp_color(&graph, args.seed)?;
            (coloring, trace.iterations())
        }
        AlgoArg::Multihash => {
            let cfg = MultiHashConfig {
                num_hashes: args.hashes,
                seed: args.seed,
                max_rounds: None,
            };
            let (coloring, trace) = multihash_color(&graph, &cfg)?;
            (coloring, trace.iterations())
        }
    };
    let elapsed = started.elapsed();

    let violations = verify_coloring(&graph, &coloring)?;
    write_coloring_file(&args.out, &coloring, algo_id(args.algo))?;

    println!(
        "graph={} algorithm={} colors={} iterations={} time_ms={:.3} valid={}",
        args.graph.display(),
        algo_id(args.algo),
        count_colors(&coloring),
        iterations,
        elapsed.as_secs_f64() * 1e3,
        violations.is_empty()
    );
    if violations.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        for v in violations.iter().take(10) {
            eprintln!("violation: vertices {} and {} share color {}", v.v, v.w, v.color);
        }
        Ok(ExitCode::FAILURE)
    }
}

fn write_coloring_file(path: &Path, coloring: &Coloring, algorithm: &str) -> anyhow::Result<()> {
    let file =
        File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut out = BufWriter::new(file);
    writeln!(out, "# n={} algorithm={}", coloring.len(), algorithm)?;
    for &c in coloring.colors() {
        writeln!(out, "{c}")?;
    }
    Ok(())
}

fn read_coloring_file(path: &Path) -> anyhow::Result<Vec<u32>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let mut colors = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.with_context(|| format!("reading {}", path.display()))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let color = trimmed.parse::<u32>().with_context(|| {
            format!("{}:{}: `{trimmed}` is not a color id", path.display(), idx + 1)
        })?;
        colors.push(color);
    }
    Ok(colors)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let colors = read_coloring_file(&args.coloring)?;
    if colors.len() != graph.num_vertices() {
        bail!(
            "coloring has {} entries but graph has {} vertices",
            colors.len(),
            graph.num_vertices()
        );
    }
    let coloring = Coloring::from_colors(colors);
    let violations = verify_coloring(&graph, &coloring)?;
    if violations.is_empty() {
        println!("OK: {} vertices, {} colors", coloring.len(), count_colors(&coloring));
        Ok(ExitCode::SUCCESS)
    } else {
        for v in &violations {
            if v.v == v.w {
                println!("violation: vertex {} is uncolored", v.v);
            } else {
                println!(
                    "violation: vertices {} and {} share color {}",
                    v.v, v.w, v.color
                );
            }
        }
        println!("{} violations", violations.len());
        Ok(ExitCode::FAILURE)
    }
}

fn cmd_stats(args: StatsArgs) -> anyhow::Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let stats = graph.degree_stats()?;
    println!("vertices: {}", graph.num_vertices());
    println!("edges (directed adjacency entries): {}", graph.num_edges());
    println!("undirected edges: {}", graph.num_edges() / 2);
    println!("min degree: {}", stats.min_degree);
    println!("max degree: {}", stats.max_degree);
    println!("avg degree: {:.4}", stats.avg_degree);
    println!("degree variance: {:.4}", stats.degree_variance);
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: BenchArgs) -> anyhow::Result<ExitCode> {
    let (cells, repetitions) = manifest::load(&args.manifest)?;
    let reports = run_benchmark(&cells, repetitions);
    let format = match args.format {
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Jsonl => ReportFormat::JsonLines,
    };
    let rendered = emit_report(&reports, format);
    match &args.out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))?;
            let mut out = BufWriter::new(file);
            out.write_all(rendered.as_bytes())
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{rendered}"),
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.valid)
        .map(|r| r.graph.as_str())
        .collect();
    if failed.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{} of {} cells failed", failed.len(), reports.len());
        Ok(ExitCode::FAILURE)
    }
}
