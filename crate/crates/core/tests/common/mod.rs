//! Independent reference implementations used as test oracles. Nothing here
//! touches `CoverageState` or the solver code paths.

#![allow(dead_code, clippy::needless_range_loop)]

use kdom_core::generate::{erdos_renyi, geometric_radius_for_mean_degree, random_geometric};
use kdom_core::{Graph, StreetNetwork, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn membership(n: usize, set: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Σ_{v ∉ D} min(k, |N(v) ∩ D|), recomputed from the definition.
pub fn objective_from_scratch(g: &Graph, k: usize, set: &[Vertex]) -> i64 {
    let member = membership(g.n(), set);
    (0..g.n())
        .filter(|&v| !member[v])
        .map(|v| g.neighbors(v).iter().filter(|&&w| member[w]).count().min(k) as i64)
        .sum()
}

pub fn feasible_from_scratch(g: &Graph, k: usize, set: &[Vertex]) -> bool {
    let member = membership(g.n(), set);
    (0..g.n())
        .filter(|&v| !member[v])
        .all(|v| g.neighbors(v).iter().filter(|&&w| member[w]).count() >= k)
}

/// objective(D ∪ {u}) − objective(D).
pub fn delta_by_simulation(g: &Graph, k: usize, set: &[Vertex], u: Vertex) -> i64 {
    let mut bigger = set.to_vec();
    bigger.push(u);
    objective_from_scratch(g, k, &bigger) - objective_from_scratch(g, k, set)
}

/// Minimum k-dominating set size by trying all 2^n subsets.
pub fn min_size_by_enumeration(g: &Graph, k: usize) -> usize {
    let n = g.n();
    assert!(n <= 20, "enumeration oracle is for tiny graphs");
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || (nbr[v] & s).count_ones() as usize >= k))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// Floyd–Warshall over the network.
pub fn all_pairs_distances(net: &StreetNetwork) -> Vec<Vec<f64>> {
    let n = net.graph().n();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for u in 0..n {
        d[u][u] = 0.0;
        for (v, w) in net.weighted_neighbors(u) {
            d[u][v] = d[u][v].min(w);
        }
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][m] + d[m][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

/// Reachability edges `(u, v)`, `u < v`, from full all-pairs distances.
pub fn reachability_by_apsp(net: &StreetNetwork, threshold: f64) -> Vec<(Vertex, Vertex)> {
    let d = all_pairs_distances(net);
    let n = d.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d[u][v] < threshold {
                out.push((u, v));
            }
        }
    }
    out
}

/// Mix of G(n, p) and random geometric graphs with `min_n <= n <= max_n`.
pub fn random_corpus(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            if i % 2 == 0 {
                let p = rng.gen_range(0.05..0.5);
                erdos_renyi(n, p, &mut rng)
            } else {
                let deg = rng.gen_range(1.0..8.0f64).min(n.saturating_sub(1) as f64);
                let r = if n >= 2 {
                    geometric_radius_for_mean_degree(n, deg)
                } else {
                    0.1
                };
                random_geometric(n, r, &mut rng)
            }
        })
        .collect()
}

/// Random subset of the vertices, each kept with probability `p`.
pub fn random_subset<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<Vertex> {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}
