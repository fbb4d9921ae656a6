//! Random instance generators for tests and benchmarks.

use std::f64::consts::PI;

use rand::Rng;

use crate::graph::{Graph, StreetNetwork};

/// G(n, p).
pub fn erdos_renyi<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::with_vertices(n, edges).expect("generated edges are valid")
}

/// Points uniform in the unit square, edges between pairs closer than `radius`.
pub fn random_geometric<R: Rng>(n: usize, radius: f64, rng: &mut R) -> Graph {
    let points: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
    let r2 = radius * radius;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (dx, dy) = (points[u].0 - points[v].0, points[u].1 - points[v].1);
            if dx * dx + dy * dy < r2 {
                edges.push((u, v));
            }
        }
    }
    Graph::with_vertices(n, edges).expect("generated edges are valid")
}

/// Probability that two uniform points of the unit square lie within `r`
/// of each other (`0 <= r <= 1`).
fn unit_square_pair_probability(r: f64) -> f64 {
    PI * r * r - 8.0 / 3.0 * r.powi(3) + 0.5 * r.powi(4)
}

/// Radius giving expected mean degree `mean_degree` for
/// [`random_geometric`] on `n` points, boundary effects included.
pub fn geometric_radius_for_mean_degree(n: usize, mean_degree: f64) -> f64 {
    assert!(n >= 2, "need at least two points");
    let target = (mean_degree / (n - 1) as f64).clamp(0.0, unit_square_pair_probability(1.0));
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if unit_square_pair_probability(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Connected-ish random street network: a random spanning tree plus extra
/// G(n, p) edges, integer lengths in `1..=max_length` meters.
pub fn random_street_network<R: Rng>(
    n: usize,
    extra_p: f64,
    max_length: u32,
    rng: &mut R,
) -> StreetNetwork {
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v, f64::from(rng.gen_range(1..=max_length))));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra_p) {
                edges.push((u, v, f64::from(rng.gen_range(1..=max_length))));
            }
        }
    }
    // a tree edge may be drawn again with another length; keep the first
    let mut seen = std::collections::HashSet::new();
    edges.retain(|&(u, v, _)| seen.insert((u, v)));
    StreetNetwork::from_weighted_edges((0..n).map(|i| i.to_string()).collect(), edges)
        .expect("generated edges are valid")
}
