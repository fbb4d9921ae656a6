//! Exact minimum k-dominating sets for small graphs.
//!
//! Iterative deepening on the target size `m`. For each `m` a depth-first
//! search picks a deficient vertex `v` with the fewest ways left to satisfy
//! it and branches on which candidate from `{v} ∪ N(v)` joins `D` first;
//! candidates tried earlier are forbidden in later branches, so no set is
//! visited twice. The first `m` with a solution is the optimum.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub optimum_size: usize,
    /// Sorted.
    pub witness: Vec<Vertex>,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactOutcome {
    Optimal(ExactResult),
    /// Budget ran out; every size below `lower_bound` was ruled out.
    Unknown {
        nodes_explored: u64,
        lower_bound: usize,
    },
}

impl ExactOutcome {
    pub fn optimal(&self) -> Option<&ExactResult> {
        match self {
            ExactOutcome::Optimal(r) => Some(r),
            ExactOutcome::Unknown { .. } => None,
        }
    }

    pub fn nodes_explored(&self) -> u64 {
        match self {
            ExactOutcome::Optimal(r) => r.nodes_explored,
            ExactOutcome::Unknown { nodes_explored, .. } => *nodes_explored,
        }
    }
}

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

enum Search {
    Found,
    Exhausted,
    NotFound,
}

struct Solver<'g> {
    graph: &'g Graph,
    k: usize,
    max_gain: usize,
    cov: Vec<usize>,
    in_set: Vec<bool>,
    forbidden: Vec<bool>,
    chosen: Vec<Vertex>,
    nodes: u64,
    budget: u64,
}

impl<'g> Solver<'g> {
    fn new(graph: &'g Graph, k: usize, budget: u64) -> Self {
        let n = graph.n();
        Self {
            graph,
            k,
            max_gain: k + graph.max_degree(),
            cov: vec![0; n],
            in_set: vec![false; n],
            forbidden: vec![false; n],
            chosen: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    #[inline]
    fn open(&self, v: Vertex) -> bool {
        !self.in_set[v] && !self.forbidden[v]
    }

    fn include(&mut self, v: Vertex) {
        self.in_set[v] = true;
        self.chosen.push(v);
        for &w in self.graph.neighbors(v) {
            self.cov[w] += 1;
        }
    }

    fn exclude(&mut self, v: Vertex) {
        self.in_set[v] = false;
        self.chosen.pop();
        for &w in self.graph.neighbors(v) {
            self.cov[w] -= 1;
        }
    }

    fn dfs(&mut self, remaining: usize) -> Search {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Search::Exhausted;
        }

        let g = self.graph;
        let mut total_deficiency = 0;
        let mut branch: Option<(usize, Vertex)> = None;
        for v in 0..g.n() {
            if self.in_set[v] || self.cov[v] >= self.k {
                continue;
            }
            if remaining == 0 {
                return Search::NotFound;
            }
            let need = self.k - self.cov[v];
            total_deficiency += need;
            let open_nbrs = g.neighbors(v).iter().filter(|&&w| self.open(w)).count();
            if self.forbidden[v] && (open_nbrs < need || need > remaining) {
                return Search::NotFound;
            }
            let options = open_nbrs + usize::from(!self.forbidden[v]);
            if branch.is_none_or(|(best, _)| options < best) {
                branch = Some((options, v));
            }
        }
        let Some((_, v)) = branch else {
            return Search::Found;
        };
        if total_deficiency > remaining * self.max_gain {
            return Search::NotFound;
        }

        let mut candidates: Vec<Vertex> = Vec::with_capacity(g.neighbors(v).len() + 1);
        if !self.forbidden[v] {
            candidates.push(v);
        }
        candidates.extend(g.neighbors(v).iter().copied().filter(|&w| self.open(w)));

        let mut outcome = Search::NotFound;
        let mut forbidden_here = Vec::with_capacity(candidates.len());
        for c in candidates {
            self.include(c);
            let result = self.dfs(remaining - 1);
            if matches!(result, Search::Found) {
                outcome = result;
                break;
            }
            self.exclude(c);
            if matches!(result, Search::Exhausted) {
                outcome = result;
                break;
            }
            self.forbidden[c] = true;
            forbidden_here.push(c);
        }
        for c in forbidden_here {
            self.forbidden[c] = false;
        }
        outcome
    }
}

/// Minimum k-dominating set by exhaustive search, or
/// [`ExactOutcome::Unknown`] once `budget` search nodes have been spent.
pub fn exact_min_k_dominating(graph: &Graph, k: usize, budget: u64) -> Result<ExactOutcome> {
    if k == 0 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    let mut solver = Solver::new(graph, k, budget);
    for target in 0..=graph.n() {
        match solver.dfs(target) {
            Search::Found => {
                let mut witness = solver.chosen.clone();
                witness.sort_unstable();
                debug_assert_eq!(witness.len(), target);
                return Ok(ExactOutcome::Optimal(ExactResult {
                    optimum_size: witness.len(),
                    witness,
                    nodes_explored: solver.nodes,
                }));
            }
            Search::Exhausted => {
                return Ok(ExactOutcome::Unknown {
                    nodes_explored: solver.nodes.min(budget),
                    lower_bound: target,
                })
            }
            Search::NotFound => {}
        }
    }
    unreachable!("the full vertex set is k-dominating")
}
