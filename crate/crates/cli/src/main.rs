//! `kdom`: build reachability graphs, compute and verify k-dominating sets,
//! and run multi-seed experiments.
//!
//! Exit codes: 0 success, 1 infeasible set (`verify`), 2 usage or I/O error,
//! 3 internal solver error.

use std::fs::{self, File};
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kdom_core::bench::{derive_seeds, run_on_graph, DEFAULT_SEED_COUNT};
use kdom_core::exact::DEFAULT_NODE_BUDGET;
use kdom_core::{
    build_reachability, emit_report, exact_min_k_dominating, load_edge_list, load_street_network,
    violations, write_edge_list, Error, ExactOutcome, Graph, Method, ReachabilityConfig,
    ReportFormat, SolveConfig, Vertex,
};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(
    name = "kdom",
    version,
    about = "Small k-dominating sets in undirected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the reachability graph of a weighted street network.
    Reach(ReachArgs),
    /// Compute one k-dominating set.
    Solve(SolveArgs),
    /// Run every method once per seed and report statistics.
    Bench(BenchArgs),
    /// Compute a minimum k-dominating set exactly (small graphs only).
    Exact(ExactArgs),
    /// Check whether a set is k-dominating.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Unweighted edge list.
    #[arg(long)]
    input: PathBuf,
    /// Required number of neighbours in the set for every outside vertex.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
}

#[derive(Args)]
struct ReachArgs {
    /// Weighted edge list (`u v meters`).
    #[arg(long)]
    input: PathBuf,
    /// Distance threshold in meters; pairs strictly closer are connected.
    #[arg(long)]
    threshold: f64,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_parser = parse_method)]
    method: Method,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    beam_width: Option<u32>,
    /// Seed as an integer, or `random` for an entropy-drawn seed.
    #[arg(long, value_parser = parse_seed)]
    seed: Option<u64>,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Comma-separated methods.
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_method)]
    methods: Vec<Method>,
    /// Comma-separated beam widths, one row each for `beam`.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u32).range(1..))]
    beam_widths: Vec<u32>,
    #[arg(long, default_value_t = DEFAULT_SEED_COUNT as u32, value_parser = clap::value_parser!(u32).range(1..))]
    n_seeds: u32,
    #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    master_seed: u64,
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    format: ReportFormat,
    /// Run trials one at a time so timings are not skewed by contention.
    #[arg(long)]
    serial_timing: bool,
    /// Print `-` instead of timings, for byte-reproducible reports.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Comma-separated vertex labels.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_seed(s: &str) -> Result<u64, String> {
    if s == "random" {
        return Ok(rand_seed());
    }
    s.parse()
        .map_err(|_| format!("`{s}` is neither an unsigned 64-bit integer nor `random`"))
}

fn rand_seed() -> u64 {
    use std::collections::hash_map::RandomState;
    use std::hash::BuildHasher;
    RandomState::new().hash_one(std::time::SystemTime::now())
}

enum Failure {
    Infeasible,
    Usage(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Infeasible => 1,
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible { .. } | Error::BudgetExhausted(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn open(path: &Path) -> Result<BufReader<File>, Failure> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Failure::Usage(format!("cannot open `{}`: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    load_edge_list(open(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn verified(graph: &Graph, k: usize, set: &[Vertex], what: &str) -> CliResult {
    let bad = violations(graph, k, set)?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Internal(format!(
            "{what} produced a set that is not {k}-dominating ({} violations)",
            bad.len()
        )))
    }
}

fn print(text: &str) -> CliResult {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn reach(args: ReachArgs) -> CliResult {
    let cfg = ReachabilityConfig::new(args.threshold)?;
    let net = load_street_network(open(&args.input)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", args.input.display())))?;
    let graph = build_reachability(&net, &cfg);
    fs::write(&args.output, write_edge_list(&graph))
        .map_err(|e| Failure::Usage(format!("cannot write `{}`: {e}", args.output.display())))?;
    print(&format!(
        "{} vertices, {} edges\n",
        graph.n(),
        graph.edge_count()
    ))
}

fn solve(args: SolveArgs) -> CliResult {
    let k = args.graph.k as usize;
    let width = match (args.method, args.beam_width) {
        (Method::Beam, Some(b)) => b as usize,
        (Method::Beam, None) => {
            return Err(Failure::Usage("--method beam requires --beam-width".into()))
        }
        (m, Some(_)) => {
            return Err(Failure::Usage(format!(
                "--beam-width is only valid with --method beam, not `{m}`"
            )))
        }
        (_, None) => 1,
    };
    if args.method == Method::Exact {
        return Err(Failure::Usage(
            "use the `exact` subcommand for exact solutions".into(),
        ));
    }
    let graph = load_graph(&args.graph.input)?;
    let cfg = SolveConfig::new(k, args.seed.unwrap_or(DEFAULT_SEED))?.with_beam_width(width)?;
    let set = args.method.solve(&graph, &cfg)?;
    verified(&graph, k, &set, args.method.name())?;
    print(&format!(
        "size {}\n{}\n",
        set.len(),
        graph.sorted_labels(&set).join(" ")
    ))
}

fn bench(args: BenchArgs) -> CliResult {
    let k = args.graph.k as usize;
    let has_beam = args.methods.contains(&Method::Beam);
    if has_beam && args.beam_widths.is_empty() {
        return Err(Failure::Usage(
            "method `beam` requires --beam-widths".into(),
        ));
    }
    if !has_beam && !args.beam_widths.is_empty() {
        return Err(Failure::Usage(
            "--beam-widths is only valid when --methods includes beam".into(),
        ));
    }
    let graph = load_graph(&args.graph.input)?;
    let name = args
        .graph
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let seeds = derive_seeds(args.master_seed, args.n_seeds as usize);

    let mut rows = Vec::new();
    for &method in &args.methods {
        let widths: Vec<Option<usize>> = if method == Method::Beam {
            args.beam_widths.iter().map(|&b| Some(b as usize)).collect()
        } else {
            vec![None]
        };
        for width in widths {
            rows.push(run_on_graph(
                &graph,
                &name,
                method,
                k,
                width,
                &seeds,
                args.serial_timing,
            )?);
        }
    }
    print(&emit_report(&rows, args.format, !args.no_timing)?)
}

fn exact(args: ExactArgs) -> CliResult {
    let k = args.graph.k as usize;
    let graph = load_graph(&args.graph.input)?;
    match exact_min_k_dominating(&graph, k, args.node_budget)? {
        ExactOutcome::Optimal(r) => {
            verified(&graph, k, &r.witness, "exact search")?;
            print(&format!(
                "optimum {}: {}\n",
                r.optimum_size,
                graph.sorted_labels(&r.witness).join(" ")
            ))
        }
        ExactOutcome::Unknown {
            nodes_explored,
            lower_bound,
        } => print(&format!(
            "unknown (budget exhausted): optimum >= {lower_bound} after {nodes_explored} nodes\n"
        )),
    }
}

fn verify(args: VerifyArgs) -> CliResult {
    let k = args.graph.k as usize;
    let graph = load_graph(&args.graph.input)?;
    let labels = args.set.split(',').map(str::trim).filter(|l| !l.is_empty());
    let mut set = graph.resolve_labels(labels)?;
    set.sort_unstable();
    set.dedup();

    let mut bad: Vec<(&str, usize)> = violations(&graph, k, &set)?
        .into_iter()
        .map(|(v, c)| (graph.label(v), c))
        .collect();
    if bad.is_empty() {
        return print("FEASIBLE\n");
    }
    bad.sort_unstable();
    let listed: Vec<String> = bad.iter().map(|(l, c)| format!("{l} cov={c}")).collect();
    print(&format!("INFEASIBLE: {}\n", listed.join(", ")))?;
    Err(Failure::Infeasible)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reach(a) => reach(a),
        Command::Solve(a) => solve(a),
        Command::Bench(a) => bench(a),
        Command::Exact(a) => exact(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Infeasible => {}
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Internal(msg) => eprintln!("internal error: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
