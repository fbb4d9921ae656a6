use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },

    #[error("line {line}: self-loop on vertex `{label}`")]
    SelfLoop { line: usize, label: String },

    #[error("line {line}: edge {u}-{v} has conflicting weights {first} and {second}")]
    ConflictingWeight {
        line: usize,
        u: String,
        v: String,
        first: f64,
        second: f64,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is already in the set")]
    AlreadyInSet(usize),

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{method} returned a set that is not {k}-dominating ({violations} violations)")]
    Infeasible {
        method: String,
        k: usize,
        violations: usize,
    },

    #[error("exact search exhausted its budget of {0} nodes")]
    BudgetExhausted(u64),

    #[error("nothing to report")]
    EmptyReport,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
