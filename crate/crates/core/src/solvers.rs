//! Coverage-objective heuristics: randomized greedy and beam search.
//!
//! Both grow `D` one vertex at a time, ranking candidates by the change in
//! the unconstrained objective (see [`CoverageState::gain`]). Ties are broken
//! by a fresh 64-bit random key per candidate, drawn in ascending vertex order;
//! the smallest key wins. Beam search with width 1 consumes the generator in
//! exactly the same order, so it reproduces greedy bit for bit.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coverage::CoverageState;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Parameters shared by every solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    k: usize,
    seed: u64,
    beam_width: usize,
}

impl SolveConfig {
    /// Beam width defaults to 1.
    pub fn new(k: usize, seed: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidConfig("k must be at least 1".into()));
        }
        Ok(Self {
            k,
            seed,
            beam_width: 1,
        })
    }

    pub fn with_beam_width(self, beam_width: usize) -> Result<Self> {
        if beam_width == 0 {
            return Err(Error::InvalidConfig("beam width must be at least 1".into()));
        }
        Ok(Self { beam_width, ..self })
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn beam_width(&self) -> usize {
        self.beam_width
    }

    /// The generator every solver draws from.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Vertices outside `D` whose addition maximises the objective, ascending.
pub fn proposed_argmax(state: &CoverageState<'_>) -> Vec<Vertex> {
    let mut best = i64::MIN;
    let mut out = Vec::new();
    for u in (0..state.graph().n()).filter(|&u| !state.contains(u)) {
        let gain = state.gain(u);
        if gain > best {
            best = gain;
            out.clear();
        }
        if gain == best {
            out.push(u);
        }
    }
    out
}

/// One iteration of the greedy loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub candidates: Vec<Vertex>,
    pub chosen: Vertex,
    pub gain: i64,
}

/// Picks the next greedy vertex: maximum gain, then smallest random key.
fn greedy_pick<R: Rng>(state: &CoverageState<'_>, rng: &mut R) -> (Vertex, i64) {
    let mut best: Option<(i64, u64, Vertex)> = None;
    for u in (0..state.graph().n()).filter(|&u| !state.contains(u)) {
        let key: u64 = rng.gen();
        let gain = state.gain(u);
        let better = match best {
            None => true,
            Some((g, k, _)) => gain > g || (gain == g && key < k),
        };
        if better {
            best = Some((gain, key, u));
        }
    }
    let (gain, _, u) = best.expect("a deficient vertex exists, so some vertex is outside D");
    (u, gain)
}

fn greedy_run(
    graph: &Graph,
    cfg: &SolveConfig,
    mut trace: Option<&mut Vec<GreedyStep>>,
) -> Vec<Vertex> {
    let mut rng = cfg.rng();
    let mut state = CoverageState::new(graph, cfg.k()).expect("k validated by SolveConfig");
    while !state.is_k_dominating() {
        let candidates = trace.as_ref().map(|_| proposed_argmax(&state));
        let (u, gain) = greedy_pick(&state, &mut rng);
        if let (Some(steps), Some(candidates)) = (trace.as_deref_mut(), candidates) {
            steps.push(GreedyStep {
                candidates,
                chosen: u,
                gain,
            });
        }
        state.add_vertex(u).expect("picked vertex is outside D");
    }
    state.members()
}

/// Randomized greedy: repeatedly add a vertex of maximum objective gain,
/// chosen uniformly among ties, until `D` is k-dominating.
pub fn greedy_k_domination(graph: &Graph, cfg: &SolveConfig) -> Vec<Vertex> {
    greedy_run(graph, cfg, None)
}

/// [`greedy_k_domination`] that also records every step.
pub fn greedy_k_domination_traced(
    graph: &Graph,
    cfg: &SolveConfig,
) -> (Vec<Vertex>, Vec<GreedyStep>) {
    let mut steps = Vec::new();
    let set = greedy_run(graph, cfg, Some(&mut steps));
    (set, steps)
}

// Fixed per-vertex keys for order-independent set fingerprints.
fn vertex_key(v: Vertex) -> u64 {
    let mut z = (v as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One entry of the beam.
#[derive(Clone, Debug)]
pub struct PartialSolution<'g> {
    members: Vec<Vertex>,
    objective_value: i64,
    fingerprint: u64,
    state: CoverageState<'g>,
}

impl<'g> PartialSolution<'g> {
    fn empty(graph: &'g Graph, k: usize) -> Result<Self> {
        Ok(Self {
            members: Vec::new(),
            objective_value: 0,
            fingerprint: 0,
            state: CoverageState::new(graph, k)?,
        })
    }

    fn extend(&self, u: Vertex) -> Self {
        let mut state = self.state.clone();
        state
            .add_vertex(u)
            .expect("expansion vertex is outside the parent set");
        let pos = self.members.partition_point(|&m| m < u);
        let mut members = Vec::with_capacity(self.members.len() + 1);
        members.extend_from_slice(&self.members[..pos]);
        members.push(u);
        members.extend_from_slice(&self.members[pos..]);
        Self {
            members,
            objective_value: state.objective(),
            fingerprint: self.fingerprint ^ vertex_key(u),
            state,
        }
    }

    /// Sorted members.
    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn objective_value(&self) -> i64 {
        self.objective_value
    }

    pub fn state(&self) -> &CoverageState<'g> {
        &self.state
    }

    pub fn is_k_dominating(&self) -> bool {
        self.state.is_k_dominating()
    }
}

struct Child {
    parent: usize,
    vertex: Vertex,
    objective: i64,
    fingerprint: u64,
    key: u64,
}

/// Ranked list of at most `width` partial solutions, all of equal size.
#[derive(Clone, Debug)]
pub struct Beam<'g> {
    solutions: Vec<PartialSolution<'g>>,
    width: usize,
}

impl<'g> Beam<'g> {
    /// Beam holding only the empty set.
    pub fn new(graph: &'g Graph, k: usize, width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidConfig("beam width must be at least 1".into()));
        }
        Ok(Self {
            solutions: vec![PartialSolution::empty(graph, k)?],
            width,
        })
    }

    pub fn solutions(&self) -> &[PartialSolution<'g>] {
        &self.solutions
    }

    /// Highest-ranked k-dominating entry, if any.
    pub fn first_feasible(&self) -> Option<&PartialSolution<'g>> {
        self.solutions.iter().find(|s| s.is_k_dominating())
    }

    // Does parent(a) ∪ {a.vertex} equal parent(b) ∪ {b.vertex}? Both parents
    // have the same size.
    fn same_set(&self, a: &Child, b: &Child) -> bool {
        if a.parent == b.parent {
            return a.vertex == b.vertex;
        }
        let other = &self.solutions[b.parent].state;
        let inside = |x: Vertex| x == b.vertex || other.contains(x);
        inside(a.vertex) && self.solutions[a.parent].members.iter().all(|&x| inside(x))
    }

    /// One round: expand every entry by every outside vertex, drop duplicate
    /// sets, rank by objective (ties by random key), keep the best `width`.
    /// Returns false when nothing could be expanded.
    pub fn advance<R: Rng>(&mut self, rng: &mut R) -> bool {
        let n = match self.solutions.first() {
            Some(s) => s.state.graph().n(),
            None => return false,
        };

        let mut children: Vec<Child> = Vec::new();
        let mut by_fingerprint: HashMap<u64, Vec<usize>> = HashMap::new();
        for (parent, sol) in self.solutions.iter().enumerate() {
            for u in (0..n).filter(|&u| !sol.state.contains(u)) {
                let child = Child {
                    parent,
                    vertex: u,
                    objective: sol.objective_value + sol.state.gain(u),
                    fingerprint: sol.fingerprint ^ vertex_key(u),
                    key: 0,
                };
                let bucket = by_fingerprint.entry(child.fingerprint).or_default();
                if bucket.iter().any(|&i| self.same_set(&children[i], &child)) {
                    continue;
                }
                bucket.push(children.len());
                children.push(child);
            }
        }
        if children.is_empty() {
            return false;
        }

        for child in &mut children {
            child.key = rng.gen();
        }
        let rank = |a: &Child, b: &Child| {
            b.objective
                .cmp(&a.objective)
                .then(a.key.cmp(&b.key))
                .then(a.parent.cmp(&b.parent))
                .then(a.vertex.cmp(&b.vertex))
        };
        if children.len() > self.width {
            children.select_nth_unstable_by(self.width - 1, rank);
            children.truncate(self.width);
        }
        children.sort_unstable_by(rank);

        let next = children
            .iter()
            .map(|c| self.solutions[c.parent].extend(c.vertex))
            .collect();
        self.solutions = next;
        true
    }
}

/// Beam search over partial solutions; returns the best-ranked k-dominating
/// set among the retained entries of the first round that contains one.
pub fn beam_k_domination(graph: &Graph, cfg: &SolveConfig) -> Vec<Vertex> {
    let mut rng = cfg.rng();
    let mut beam = Beam::new(graph, cfg.k(), cfg.beam_width()).expect("config validated");
    // the empty set is only feasible on the empty graph
    if let Some(s) = beam.first_feasible() {
        return s.members().to_vec();
    }
    loop {
        let expanded = beam.advance(&mut rng);
        assert!(
            expanded,
            "the full vertex set is k-dominating, so the search ends before running dry"
        );
        if let Some(s) = beam.first_feasible() {
            return s.members().to_vec();
        }
    }
}
