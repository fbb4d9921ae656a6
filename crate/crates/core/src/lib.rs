//! Small k-dominating sets in simple undirected graphs.
//!
//! A set `D` is k-dominating when every vertex outside `D` has at least `k`
//! neighbours inside it. The crate provides:
//!
//! - [`graph`]: graph and street-network types plus the edge-list format
//! - [`reachability`]: reachability graphs from street networks
//! - [`coverage`]: the coverage objective and incremental gains
//! - [`solvers`]: randomized greedy and beam search on the coverage objective
//! - [`baselines`]: standard greedy and the layered MIS method of Couture et al.
//! - [`exact`]: an exact oracle for small graphs
//! - [`bench`]: multi-seed experiments and CSV/table reports
//! - [`generate`]: random instances

pub mod baselines;
pub mod bench;
pub mod coverage;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod reachability;
pub mod solvers;

pub use baselines::{couture_k_domination, standard_greedy};
pub use bench::{emit_report, run_experiment, ExperimentPlan, Method, ReportFormat, TrialStats};
pub use coverage::{is_k_dominating_set, violations, CoverageState};
pub use error::{Error, Result};
pub use exact::{exact_min_k_dominating, ExactOutcome, ExactResult};
pub use graph::{
    load_edge_list, load_street_network, write_edge_list, Graph, StreetNetwork, Vertex,
};
pub use reachability::{build_reachability, ReachabilityConfig};
pub use solvers::{beam_k_domination, greedy_k_domination, SolveConfig};
