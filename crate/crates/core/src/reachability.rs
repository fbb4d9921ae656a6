//! Reachability graphs: connect two street-network vertices whenever their
//! shortest-path distance is strictly below a threshold.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, StreetNetwork, Vertex};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReachabilityConfig {
    threshold: f64,
}

impl ReachabilityConfig {
    /// `threshold` in meters; must be positive and finite.
    pub fn new(threshold: f64) -> Result<Self> {
        if !(threshold.is_finite() && threshold > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "reachability threshold must be a positive number of meters, got {threshold}"
            )));
        }
        Ok(Self { threshold })
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }
}

#[derive(Clone, Copy, PartialEq)]
struct Frontier {
    dist: f64,
    vertex: Vertex,
}

impl Eq for Frontier {}

impl Ord for Frontier {
    // reversed: BinaryHeap is a max-heap
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Scratch {
    dist: Vec<f64>,
    touched: Vec<Vertex>,
    heap: BinaryHeap<Frontier>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![f64::INFINITY; n],
            touched: Vec::new(),
            heap: BinaryHeap::new(),
        }
    }
}

/// Vertices `v > source` with `dist(source, v) < threshold`, ascending.
///
/// The search stops as soon as the smallest tentative distance reaches the
/// threshold. Only pairs with `source < v` are reported, so every edge of the
/// output is decided by exactly one search and the result is symmetric even if
/// floating-point path sums differ by direction.
fn reachable_above(
    net: &StreetNetwork,
    source: Vertex,
    threshold: f64,
    s: &mut Scratch,
) -> Vec<Vertex> {
    let mut found = Vec::new();
    s.dist[source] = 0.0;
    s.touched.push(source);
    s.heap.push(Frontier {
        dist: 0.0,
        vertex: source,
    });

    while let Some(Frontier { dist, vertex }) = s.heap.pop() {
        if dist >= threshold {
            break;
        }
        if dist > s.dist[vertex] {
            continue;
        }
        if vertex > source {
            found.push(vertex);
        }
        for (next, len) in net.weighted_neighbors(vertex) {
            let candidate = dist + len;
            if candidate < threshold && candidate < s.dist[next] {
                if s.dist[next].is_infinite() {
                    s.touched.push(next);
                }
                s.dist[next] = candidate;
                s.heap.push(Frontier {
                    dist: candidate,
                    vertex: next,
                });
            }
        }
    }

    for &v in &s.touched {
        s.dist[v] = f64::INFINITY;
    }
    s.touched.clear();
    s.heap.clear();
    found.sort_unstable();
    found
}

/// Builds the reachability graph of `net`: same vertices and labels, with an
/// edge `u-v` iff the shortest-path distance is `< cfg.threshold()`.
///
/// Distances are compared without tolerance. Sources are searched in parallel;
/// the output does not depend on scheduling.
pub fn build_reachability(net: &StreetNetwork, cfg: &ReachabilityConfig) -> Graph {
    let n = net.graph().n();
    let threshold = cfg.threshold();
    let per_source: Vec<Vec<Vertex>> = (0..n)
        .into_par_iter()
        .map_init(
            || Scratch::new(n),
            |scratch, source| reachable_above(net, source, threshold, scratch),
        )
        .collect();

    let edges = per_source
        .into_iter()
        .enumerate()
        .flat_map(|(u, list)| list.into_iter().map(move |v| (u, v)));
    Graph::from_edges(net.graph().labels().to_vec(), edges)
        .expect("reachability edges are in range and loop-free")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{load_street_network, write_edge_list};

    fn path_net() -> StreetNetwork {
        load_street_network("x y 300\ny z 300\n".as_bytes()).unwrap()
    }

    #[test]
    fn short_threshold_keeps_direct_edges() {
        let g = build_reachability(&path_net(), &ReachabilityConfig::new(500.0).unwrap());
        assert_eq!(write_edge_list(&g), "x y\ny z\n");
    }

    #[test]
    fn long_threshold_adds_two_hop_edge() {
        let g = build_reachability(&path_net(), &ReachabilityConfig::new(700.0).unwrap());
        assert_eq!(write_edge_list(&g), "x y\nx z\ny z\n");
    }

    #[test]
    fn comparison_is_strict() {
        let at = build_reachability(&path_net(), &ReachabilityConfig::new(600.0).unwrap());
        assert!(!at.has_edge(0, 2));
        let at_edge = build_reachability(&path_net(), &ReachabilityConfig::new(300.0).unwrap());
        assert_eq!(at_edge.edge_count(), 0);
    }

    #[test]
    fn below_min_length_is_edgeless() {
        let g = build_reachability(&path_net(), &ReachabilityConfig::new(299.9).unwrap());
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.labels(), path_net().graph().labels());
    }

    #[test]
    fn disconnected_pairs_get_no_edge() {
        let net = load_street_network("a b 1\nc d 1\n".as_bytes()).unwrap();
        let g = build_reachability(&net, &ReachabilityConfig::new(1e9).unwrap());
        assert_eq!(write_edge_list(&g), "a b\nc d\n");
    }

    #[test]
    fn rejects_bad_threshold() {
        assert!(ReachabilityConfig::new(0.0).is_err());
        assert!(ReachabilityConfig::new(-1.0).is_err());
        assert!(ReachabilityConfig::new(f64::NAN).is_err());
    }
}
