//! Coverage bookkeeping for a growing vertex set `D`.
//!
//! For a vertex `v` the coverage is `min(k, |N(v) ∩ D|)`. The unconstrained
//! objective sums coverage over vertices outside `D`; when `D` is
//! k-dominating it equals `k * (n - |D|)`, so maximising it minimises `|D|`.
//!
//! A vertex is *deficient* when it is outside `D` and has fewer than `k`
//! neighbours in `D`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug)]
pub struct CoverageState<'g> {
    graph: &'g Graph,
    k: usize,
    in_set: Vec<bool>,
    // uncapped |N(v) ∩ D|
    cov: Vec<u32>,
    // number of deficient neighbours
    deficient_nbrs: Vec<u32>,
    size: usize,
    deficient: usize,
    objective: i64,
}

impl<'g> CoverageState<'g> {
    /// State for `D = ∅`.
    pub fn new(graph: &'g Graph, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidConfig("k must be at least 1".into()));
        }
        let n = graph.n();
        Ok(Self {
            graph,
            k,
            in_set: vec![false; n],
            cov: vec![0; n],
            deficient_nbrs: (0..n).map(|v| graph.neighbors(v).len() as u32).collect(),
            size: 0,
            deficient: n,
            objective: 0,
        })
    }

    /// State for an arbitrary `D`; repeated members are rejected.
    pub fn with_set(graph: &'g Graph, k: usize, set: &[Vertex]) -> Result<Self> {
        let mut state = Self::new(graph, k)?;
        for &v in set {
            state.add_vertex(v)?;
        }
        Ok(state)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.in_set[v]
    }

    /// Members of `D`, ascending.
    pub fn members(&self) -> Vec<Vertex> {
        (0..self.in_set.len()).filter(|&v| self.in_set[v]).collect()
    }

    /// Uncapped `|N(v) ∩ D|`.
    #[inline]
    pub fn neighbor_count(&self, v: Vertex) -> usize {
        self.cov[v] as usize
    }

    /// `min(k, |N(v) ∩ D|)`.
    pub fn coverage(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.capped(v))
    }

    #[inline]
    fn capped(&self, v: Vertex) -> usize {
        (self.cov[v] as usize).min(self.k)
    }

    #[inline]
    pub fn is_deficient(&self, v: Vertex) -> bool {
        !self.in_set[v] && (self.cov[v] as usize) < self.k
    }

    /// Number of deficient vertices in N(v).
    #[inline]
    pub fn deficient_neighbors(&self, v: Vertex) -> usize {
        self.deficient_nbrs[v] as usize
    }

    pub fn deficient_count(&self) -> usize {
        self.deficient
    }

    /// Sum of coverage over vertices outside `D`.
    pub fn objective(&self) -> i64 {
        self.objective
    }

    pub fn is_k_dominating(&self) -> bool {
        self.deficient == 0
    }

    /// Change in the objective if `u` joined `D`.
    pub fn delta(&self, u: Vertex) -> Result<i64> {
        self.check_vertex(u)?;
        if self.in_set[u] {
            return Err(Error::AlreadyInSet(u));
        }
        Ok(self.gain(u))
    }

    /// Unchecked [`delta`](Self::delta): `u` must be outside `D`.
    #[inline]
    pub fn gain(&self, u: Vertex) -> i64 {
        debug_assert!(!self.in_set[u]);
        self.deficient_nbrs[u] as i64 - self.capped(u) as i64
    }

    pub fn add_vertex(&mut self, u: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        if self.in_set[u] {
            return Err(Error::AlreadyInSet(u));
        }
        let graph = self.graph;
        self.objective += self.gain(u);

        if (self.cov[u] as usize) < self.k {
            self.deficient -= 1;
            for &w in graph.neighbors(u) {
                self.deficient_nbrs[w] -= 1;
            }
        }
        self.in_set[u] = true;
        self.size += 1;

        for &w in graph.neighbors(u) {
            self.cov[w] += 1;
            if !self.in_set[w] && self.cov[w] as usize == self.k {
                self.deficient -= 1;
                for &x in graph.neighbors(w) {
                    self.deficient_nbrs[x] -= 1;
                }
            }
        }
        Ok(())
    }

    /// Recounts every maintained quantity from scratch and reports the first
    /// mismatch.
    pub fn check_counters(&self) -> std::result::Result<(), String> {
        let g = self.graph;
        let mut objective = 0i64;
        let mut deficient = 0usize;
        for v in 0..g.n() {
            let count = g.neighbors(v).iter().filter(|&&w| self.in_set[w]).count();
            if count != self.cov[v] as usize {
                return Err(format!(
                    "cov[{v}] = {} but recount gives {count}",
                    self.cov[v]
                ));
            }
            let undom = g
                .neighbors(v)
                .iter()
                .filter(|&&w| self.is_deficient(w))
                .count();
            if undom != self.deficient_nbrs[v] as usize {
                return Err(format!(
                    "deficient_nbrs[{v}] = {} but recount gives {undom}",
                    self.deficient_nbrs[v]
                ));
            }
            if !self.in_set[v] {
                objective += count.min(self.k) as i64;
                if count < self.k {
                    deficient += 1;
                }
            }
        }
        let size = self.in_set.iter().filter(|&&b| b).count();
        if size != self.size {
            return Err(format!("size = {} but recount gives {size}", self.size));
        }
        if deficient != self.deficient {
            return Err(format!(
                "deficient = {} but recount gives {deficient}",
                self.deficient
            ));
        }
        if objective != self.objective {
            return Err(format!(
                "objective = {} but recount gives {objective}",
                self.objective
            ));
        }
        Ok(())
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.in_set.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.in_set.len(),
            });
        }
        Ok(())
    }
}

/// Vertices outside `set` with fewer than `k` neighbours in it, paired with
/// their neighbour count. Computed from scratch, independent of
/// [`CoverageState`].
pub fn violations(graph: &Graph, k: usize, set: &[Vertex]) -> Result<Vec<(Vertex, usize)>> {
    let mut member = vec![false; graph.n()];
    for &v in set {
        if v >= graph.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: graph.n(),
            });
        }
        member[v] = true;
    }
    Ok((0..graph.n())
        .filter(|&v| !member[v])
        .filter_map(|v| {
            let count = graph.neighbors(v).iter().filter(|&&w| member[w]).count();
            (count < k).then_some((v, count))
        })
        .collect())
}

pub fn is_k_dominating_set(graph: &Graph, k: usize, set: &[Vertex]) -> bool {
    violations(graph, k, set).is_ok_and(|v| v.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;

    fn path() -> Graph {
        load_edge_list("a b\nb c\n".as_bytes()).unwrap()
    }

    const A: Vertex = 0;
    const B: Vertex = 1;
    const C: Vertex = 2;

    #[test]
    fn coverage_on_path() {
        let g = path();
        let s = CoverageState::with_set(&g, 2, &[A]).unwrap();
        assert_eq!(s.coverage(B).unwrap(), 1);
        assert_eq!(s.coverage(C).unwrap(), 0);
        assert!(s.coverage(3).is_err());
        let empty = CoverageState::new(&g, 2).unwrap();
        assert!((0..3).all(|v| empty.coverage(v).unwrap() == 0));
    }

    #[test]
    fn objective_values() {
        let g = path();
        assert_eq!(
            CoverageState::with_set(&g, 2, &[A, C]).unwrap().objective(),
            2
        );
        assert_eq!(CoverageState::new(&g, 2).unwrap().objective(), 0);
        assert_eq!(
            CoverageState::with_set(&g, 2, &[A, B, C])
                .unwrap()
                .objective(),
            0
        );
    }

    #[test]
    fn feasibility() {
        let g = path();
        for k in 1..4 {
            assert!(CoverageState::with_set(&g, k, &[A, B, C])
                .unwrap()
                .is_k_dominating());
        }
        assert!(CoverageState::with_set(&g, 1, &[B])
            .unwrap()
            .is_k_dominating());
        assert!(!CoverageState::with_set(&g, 2, &[A])
            .unwrap()
            .is_k_dominating());
    }

    #[test]
    fn delta_prefers_least_covered() {
        let g = path();
        let s = CoverageState::with_set(&g, 2, &[A]).unwrap();
        assert_eq!(s.delta(C).unwrap(), 1);
        assert_eq!(s.delta(B).unwrap(), 0);
        assert!(matches!(s.delta(A), Err(Error::AlreadyInSet(0))));
    }

    #[test]
    fn delta_on_empty_set_is_degree() {
        let g = path();
        let s = CoverageState::new(&g, 3).unwrap();
        for v in 0..3 {
            assert_eq!(s.delta(v).unwrap(), g.degree(v).unwrap() as i64);
        }
    }

    #[test]
    fn add_center_of_path() {
        let g = path();
        let mut s = CoverageState::new(&g, 2).unwrap();
        assert_eq!(s.deficient_neighbors(B), 2);
        s.add_vertex(B).unwrap();
        assert_eq!(
            (0..3).map(|v| s.neighbor_count(v)).collect::<Vec<_>>(),
            vec![1, 0, 1]
        );
        assert_eq!(s.deficient_neighbors(B), 2);
        s.check_counters().unwrap();
        assert!(matches!(s.add_vertex(B), Err(Error::AlreadyInSet(1))));
    }

    #[test]
    fn k_zero_rejected() {
        assert!(CoverageState::new(&path(), 0).is_err());
    }

    #[test]
    fn violations_report_counts() {
        let g = path();
        assert_eq!(violations(&g, 2, &[A]).unwrap(), vec![(B, 1), (C, 0)]);
        assert!(is_k_dominating_set(&g, 2, &[A, C]));
        assert!(violations(&g, 1, &[7]).is_err());
    }
}
