//! Multi-seed experiments: one solve per seed, every result re-verified,
//! size and timing statistics per (graph, method, k, beam width).

use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::baselines::{couture_k_domination, standard_greedy};
use crate::coverage::violations;
use crate::error::{Error, Result};
use crate::exact::{exact_min_k_dominating, ExactOutcome, DEFAULT_NODE_BUDGET};
use crate::graph::{load_edge_list, Graph, Vertex};
use crate::solvers::{beam_k_domination, greedy_k_domination, SolveConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Greedy,
    Beam,
    Standard,
    Couture,
    Exact,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Greedy,
        Method::Beam,
        Method::Standard,
        Method::Couture,
        Method::Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Greedy => "greedy",
            Method::Beam => "beam",
            Method::Standard => "standard",
            Method::Couture => "couture",
            Method::Exact => "exact",
        }
    }

    /// Runs the method. `Exact` ignores the seed and fails if the default
    /// node budget is exhausted.
    pub fn solve(self, graph: &Graph, cfg: &SolveConfig) -> Result<Vec<Vertex>> {
        Ok(match self {
            Method::Greedy => greedy_k_domination(graph, cfg),
            Method::Beam => beam_k_domination(graph, cfg),
            Method::Standard => standard_greedy(graph, cfg),
            Method::Couture => couture_k_domination(graph, cfg),
            Method::Exact => match exact_min_k_dominating(graph, cfg.k(), DEFAULT_NODE_BUDGET)? {
                ExactOutcome::Optimal(r) => r.witness,
                ExactOutcome::Unknown { .. } => {
                    return Err(Error::BudgetExhausted(DEFAULT_NODE_BUDGET))
                }
            },
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "unknown method `{s}` (expected greedy|beam|standard|couture|exact)"
                ))
            })
    }
}

/// Per-trial seeds derived from a master seed. Seed `i` depends only on
/// `(master, i)`, so asking for more seeds leaves earlier ones unchanged.
pub fn derive_seeds(master: u64, count: usize) -> Vec<u64> {
    (0..count as u64)
        .map(|i| {
            // splitmix64 finaliser: a bijection, so seeds are distinct
            let mut z = master.wrapping_add((i + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^ (z >> 31)
        })
        .collect()
}

pub const DEFAULT_SEED_COUNT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentPlan {
    pub graph_path: PathBuf,
    pub method: Method,
    pub k: usize,
    /// Required for `Beam`, forbidden otherwise.
    pub beam_width: Option<usize>,
    pub seeds: Vec<u64>,
    /// Run trials one after another so timings are not skewed by contention.
    pub serial: bool,
}

impl ExperimentPlan {
    pub fn new(graph_path: impl Into<PathBuf>, method: Method, k: usize, master_seed: u64) -> Self {
        Self {
            graph_path: graph_path.into(),
            method,
            k,
            beam_width: None,
            seeds: derive_seeds(master_seed, DEFAULT_SEED_COUNT),
            serial: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        validate_trials(self.method, self.k, self.beam_width, &self.seeds)
    }

    fn graph_name(&self) -> String {
        self.graph_path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| self.graph_path.display().to_string())
    }
}

fn validate_trials(
    method: Method,
    k: usize,
    beam_width: Option<usize>,
    seeds: &[u64],
) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    if seeds.is_empty() {
        return Err(Error::InvalidConfig("at least one seed is required".into()));
    }
    if seeds.iter().collect::<HashSet<_>>().len() != seeds.len() {
        return Err(Error::InvalidConfig("seeds must be distinct".into()));
    }
    match (method, beam_width) {
        (Method::Beam, None) => Err(Error::InvalidConfig(
            "beam search needs a beam width".into(),
        )),
        (Method::Beam, Some(0)) => {
            Err(Error::InvalidConfig("beam width must be at least 1".into()))
        }
        (m, Some(_)) if m != Method::Beam => Err(Error::InvalidConfig(format!(
            "beam width given for non-beam method `{m}`"
        ))),
        _ => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialStats {
    pub graph: String,
    pub method: Method,
    pub k: usize,
    pub beam_width: Option<usize>,
    pub sizes: Vec<usize>,
    pub times_s: Vec<f64>,
    pub min_size: usize,
    pub mean_size: f64,
    pub stddev_size: f64,
    pub mean_time_s: f64,
    pub stddev_time_s: f64,
}

impl TrialStats {
    fn from_trials(
        graph: String,
        method: Method,
        k: usize,
        beam_width: Option<usize>,
        trials: Vec<(usize, f64)>,
    ) -> Self {
        let (sizes, times_s): (Vec<usize>, Vec<f64>) = trials.into_iter().unzip();
        let size_values: Vec<f64> = sizes.iter().map(|&s| s as f64).collect();
        let (mean_size, stddev_size) = mean_and_sample_stddev(&size_values);
        let (mean_time_s, stddev_time_s) = mean_and_sample_stddev(&times_s);
        Self {
            graph,
            method,
            k,
            beam_width,
            min_size: sizes.iter().copied().min().unwrap_or(0),
            sizes,
            times_s,
            mean_size,
            stddev_size,
            mean_time_s,
            stddev_time_s,
        }
    }

    /// Fewer than two trials: the standard deviation is reported as 0.0.
    pub fn is_degenerate(&self) -> bool {
        self.sizes.len() < 2
    }
}

/// Mean and sample (n - 1) standard deviation; the deviation of fewer than
/// two values is 0.0.
pub fn mean_and_sample_stddev(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = values.iter().map(|x| (x - mean).powi(2)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}

fn run_trial(graph: &Graph, method: Method, cfg: &SolveConfig) -> Result<(usize, f64)> {
    let start = Instant::now();
    let set = method.solve(graph, cfg)?;
    let elapsed = start.elapsed().as_secs_f64();
    let bad = violations(graph, cfg.k(), &set)?;
    if !bad.is_empty() {
        return Err(Error::Infeasible {
            method: method.to_string(),
            k: cfg.k(),
            violations: bad.len(),
        });
    }
    Ok((set.len(), elapsed))
}

/// Runs `method` once per seed on an in-memory graph.
pub fn run_on_graph(
    graph: &Graph,
    graph_name: &str,
    method: Method,
    k: usize,
    beam_width: Option<usize>,
    seeds: &[u64],
    serial: bool,
) -> Result<TrialStats> {
    validate_trials(method, k, beam_width, seeds)?;
    let base = SolveConfig::new(k, 0)?.with_beam_width(beam_width.unwrap_or(1))?;
    let one = |&seed: &u64| run_trial(graph, method, &base.with_seed(seed));
    let trials: Result<Vec<_>> = if serial {
        seeds.iter().map(one).collect()
    } else {
        seeds.par_iter().map(one).collect()
    };
    Ok(TrialStats::from_trials(
        graph_name.to_string(),
        method,
        k,
        beam_width,
        trials?,
    ))
}

/// Loads the plan's graph and runs it. Graph loading is not timed.
pub fn run_experiment(plan: &ExperimentPlan) -> Result<TrialStats> {
    plan.validate()?;
    let file = File::open(&plan.graph_path)?;
    let graph = load_edge_list(BufReader::new(file))?;
    run_on_graph(
        &graph,
        &plan.graph_name(),
        plan.method,
        plan.k,
        plan.beam_width,
        &plan.seeds,
        plan.serial,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Table,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "table" => Ok(ReportFormat::Table),
            _ => Err(Error::InvalidConfig(format!(
                "unknown format `{s}` (expected csv|table)"
            ))),
        }
    }
}

pub const REPORT_COLUMNS: [&str; 10] = [
    "graph",
    "method",
    "k",
    "b",
    "n_seeds",
    "min",
    "mean",
    "stddev",
    "mean_time_s",
    "stddev_time_s",
];

fn report_row(s: &TrialStats, with_timing: bool) -> [String; 10] {
    let time = |t: f64| {
        if with_timing {
            format!("{t:.6}")
        } else {
            "-".to_string()
        }
    };
    [
        s.graph.clone(),
        s.method.to_string(),
        s.k.to_string(),
        s.beam_width.map(|b| b.to_string()).unwrap_or_default(),
        s.sizes.len().to_string(),
        s.min_size.to_string(),
        format!("{:.3}", s.mean_size),
        format!("{:.3}", s.stddev_size),
        time(s.mean_time_s),
        time(s.stddev_time_s),
    ]
}

/// Renders one row per experiment. With `with_timing` false the two timing
/// columns hold `-`, which makes the report reproducible byte for byte.
pub fn emit_report(
    stats: &[TrialStats],
    format: ReportFormat,
    with_timing: bool,
) -> Result<String> {
    if stats.is_empty() {
        return Err(Error::EmptyReport);
    }
    let rows: Vec<[String; 10]> = stats.iter().map(|s| report_row(s, with_timing)).collect();
    let mut out = String::new();
    match format {
        ReportFormat::Csv => {
            out.push_str(&REPORT_COLUMNS.join(","));
            out.push('\n');
            for row in &rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        ReportFormat::Table => {
            let mut widths = REPORT_COLUMNS.map(str::len);
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let render = |cells: Vec<&str>, out: &mut String| {
                let line: Vec<String> = cells
                    .iter()
                    .zip(widths)
                    .enumerate()
                    .map(|(i, (c, w))| {
                        if i < 2 {
                            format!("{c:<w$}")
                        } else {
                            format!("{c:>w$}")
                        }
                    })
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            };
            render(REPORT_COLUMNS.to_vec(), &mut out);
            let rule: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
            out.push_str(&"-".repeat(rule));
            out.push('\n');
            for row in &rows {
                render(row.iter().map(String::as_str).collect(), &mut out);
            }
            if stats.iter().any(TrialStats::is_degenerate) {
                writeln!(
                    out,
                    "note: single-seed rows report stddev as 0.0 (undefined for one sample)"
                )
                .expect("writing to a String cannot fail");
            }
        }
    }
    Ok(out)
}
