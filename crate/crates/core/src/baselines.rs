//! Comparison methods: the standard closed-neighbourhood greedy and the
//! layered maximal-independent-set construction of Couture et al.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coverage::CoverageState;
use crate::graph::{Graph, Vertex};
use crate::solvers::SolveConfig;

/// Deficient vertices in N[u], for `u` outside `D`.
#[inline]
pub fn standard_score(state: &CoverageState<'_>, u: Vertex) -> usize {
    state.deficient_neighbors(u) + usize::from(state.is_deficient(u))
}

/// Vertices outside `D` with maximum [`standard_score`], ascending.
pub fn standard_argmax(state: &CoverageState<'_>) -> Vec<Vertex> {
    let mut best = 0;
    let mut out = Vec::new();
    for u in (0..state.graph().n()).filter(|&u| !state.contains(u)) {
        let score = standard_score(state, u);
        if out.is_empty() || score > best {
            best = score;
            out.clear();
        }
        if score == best {
            out.push(u);
        }
    }
    out
}

/// Standard greedy: add a vertex whose closed neighbourhood holds the most
/// vertices that are not dominated enough, uniformly among ties.
pub fn standard_greedy(graph: &Graph, cfg: &SolveConfig) -> Vec<Vertex> {
    let mut rng = cfg.rng();
    let mut state = CoverageState::new(graph, cfg.k()).expect("k validated by SolveConfig");
    while !state.is_k_dominating() {
        let mut best: Option<(usize, u64, Vertex)> = None;
        for u in (0..graph.n()).filter(|&u| !state.contains(u)) {
            let key: u64 = rng.gen();
            let score = standard_score(&state, u);
            if best.is_none_or(|(s, k, _)| score > s || (score == s && key < k)) {
                best = Some((score, key, u));
            }
        }
        let (_, _, u) = best.expect("a deficient vertex is outside D");
        state.add_vertex(u).expect("picked vertex is outside D");
    }
    state.members()
}

/// One layer of the Couture et al. construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoutureRound {
    /// Vertices not dominated enough at the start of the round, ascending.
    pub deficient: Vec<Vertex>,
    /// Maximal independent set of the subgraph induced by `deficient`, ascending.
    pub selected: Vec<Vertex>,
}

/// Greedy randomized sequential MIS of the subgraph induced by `pool`: scan a
/// random permutation, keep a vertex if no earlier kept vertex is adjacent.
pub fn random_sequential_mis<R: Rng>(graph: &Graph, pool: &[Vertex], rng: &mut R) -> Vec<Vertex> {
    let mut order = pool.to_vec();
    order.shuffle(rng);
    let mut taken = vec![false; graph.n()];
    let mut mis = Vec::new();
    for v in order {
        if !graph.neighbors(v).iter().any(|&w| taken[w]) {
            taken[v] = true;
            mis.push(v);
        }
    }
    mis.sort_unstable();
    mis
}

fn couture_run(
    graph: &Graph,
    cfg: &SolveConfig,
    mut trace: Option<&mut Vec<CoutureRound>>,
) -> Vec<Vertex> {
    let mut rng = cfg.rng();
    let mut state = CoverageState::new(graph, cfg.k()).expect("k validated by SolveConfig");
    while !state.is_k_dominating() {
        let deficient: Vec<Vertex> = (0..graph.n()).filter(|&v| state.is_deficient(v)).collect();
        let selected = random_sequential_mis(graph, &deficient, &mut rng);
        for &v in &selected {
            state
                .add_vertex(v)
                .expect("deficient vertices are outside D");
        }
        if let Some(rounds) = trace.as_deref_mut() {
            rounds.push(CoutureRound {
                deficient,
                selected,
            });
        }
    }
    state.members()
}

/// Couture et al.: while some vertex is not dominated enough, add a maximal
/// independent set of those vertices. Finishes within `k` rounds.
pub fn couture_k_domination(graph: &Graph, cfg: &SolveConfig) -> Vec<Vertex> {
    couture_run(graph, cfg, None)
}

/// [`couture_k_domination`] that also records each round.
pub fn couture_k_domination_traced(
    graph: &Graph,
    cfg: &SolveConfig,
) -> (Vec<Vertex>, Vec<CoutureRound>) {
    let mut rounds = Vec::new();
    let set = couture_run(graph, cfg, Some(&mut rounds));
    (set, rounds)
}
