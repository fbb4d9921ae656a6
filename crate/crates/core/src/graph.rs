//! Simple undirected graphs with dense vertex indices, plus the line-oriented
//! edge-list format used for persistence.
//!
//! Format: one record per line, `#` starts a comment that runs to end of line.
//!
//! ```text
//! u v        # unweighted edge
//! u v 312.5  # weighted edge (street networks), length in meters
//! u          # vertex declaration, needed for isolated vertices
//! ```
//!
//! Vertex names are arbitrary whitespace-free tokens. They are mapped to
//! indices `0..n` in order of first appearance.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Immutable simple undirected graph. Adjacency lists are sorted and free of
/// duplicates and self-loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labels and index pairs. Repeated edges collapse;
    /// self-loops, duplicate labels and out-of-range endpoints are rejected.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(Error::InvalidGraph(format!(
                    "label `{label}` is empty or contains whitespace"
                )));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate label `{label}`")));
            }
        }

        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on `{}`", labels[u])));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }

        Ok(Self {
            adjacency,
            labels,
            index,
            edge_count: twice / 2,
        })
    }

    /// Graph on `n` vertices labelled `"0"`, `"1"`, ... `"n-1"`.
    pub fn with_vertices<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Open neighbourhood N(v), sorted ascending.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    #[inline]
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    /// Maps labels to indices, failing on the first unknown label.
    pub fn resolve_labels<'a, I>(&self, labels: I) -> Result<Vec<Vertex>>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels
            .into_iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))
            })
            .collect()
    }

    /// Labels of `set`, sorted lexicographically.
    pub fn sorted_labels(&self, set: &[Vertex]) -> Vec<&str> {
        let mut out: Vec<&str> = set.iter().map(|&v| self.label(v)).collect();
        out.sort_unstable();
        out
    }

    /// Re-checks every structural invariant from scratch.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.labels.len() != n || self.index.len() != n {
            return Err(Error::InvalidGraph("label map is not a bijection".into()));
        }
        for (i, label) in self.labels.iter().enumerate() {
            if self.index.get(label) != Some(&i) {
                return Err(Error::InvalidGraph(format!("label `{label}` misindexed")));
            }
        }
        let mut twice = 0;
        for (v, list) in self.adjacency.iter().enumerate() {
            twice += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "adjacency of `{}` is unsorted or has duplicates",
                    self.labels[v]
                )));
            }
            for &u in list {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, n });
                }
                if u == v {
                    return Err(Error::InvalidGraph(format!(
                        "self-loop on `{}`",
                        self.labels[v]
                    )));
                }
                if self.adjacency[u].binary_search(&v).is_err() {
                    return Err(Error::InvalidGraph(format!(
                        "edge {}-{} is not symmetric",
                        self.labels[v], self.labels[u]
                    )));
                }
            }
        }
        if twice != 2 * self.edge_count {
            return Err(Error::InvalidGraph("edge count mismatch".into()));
        }
        Ok(())
    }

    /// Subgraph induced by `keep` (indices into this graph), relabelled densely
    /// in the order given.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<Graph> {
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
            position[v] = i;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let edges: Vec<_> = keep
            .iter()
            .enumerate()
            .flat_map(|(i, &v)| {
                let position = &position;
                self.adjacency[v]
                    .iter()
                    .filter(move |&&u| position[u] != usize::MAX && position[u] > i)
                    .map(move |&u| (i, position[u]))
            })
            .collect();
        Graph::from_edges(labels, edges)
    }
}

/// Street network: an undirected graph whose edges carry strictly positive
/// lengths in meters.
#[derive(Clone, Debug, PartialEq)]
pub struct StreetNetwork {
    graph: Graph,
    // lengths[v][i] is the length of the edge to graph.neighbors(v)[i]
    lengths: Vec<Vec<f64>>,
}

impl StreetNetwork {
    /// Builds a network from labels and weighted index triples. A repeated
    /// edge must repeat the same weight.
    pub fn from_weighted_edges<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, f64)>,
    {
        let mut weights: HashMap<(Vertex, Vertex), f64> = HashMap::new();
        for (u, v, w) in edges {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has non-positive or non-finite length {w}"
                )));
            }
            let key = (u.min(v), u.max(v));
            match weights.entry(key) {
                Entry::Occupied(e) if *e.get() != w => {
                    return Err(Error::InvalidGraph(format!(
                        "edge {u}-{v} has conflicting lengths {} and {w}",
                        e.get()
                    )))
                }
                Entry::Occupied(_) => {}
                Entry::Vacant(e) => {
                    e.insert(w);
                }
            }
        }
        let graph = Graph::from_edges(labels, weights.keys().copied())?;
        let lengths = (0..graph.n())
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .map(|&u| weights[&(v.min(u), v.max(u))])
                    .collect()
            })
            .collect();
        Ok(Self { graph, lengths })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `(neighbor, length)` pairs of `v`, in ascending neighbor order.
    pub fn weighted_neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, f64)> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .zip(self.lengths[v].iter().copied())
    }

    pub fn length(&self, u: Vertex, v: Vertex) -> Option<f64> {
        let i = self.graph.neighbors(u).binary_search(&v).ok()?;
        Some(self.lengths[u][i])
    }

    pub fn min_length(&self) -> Option<f64> {
        self.lengths.iter().flatten().copied().reduce(f64::min)
    }
}

struct ParsedList {
    labels: Vec<String>,
    edges: Vec<(Vertex, Vertex, f64)>,
}

fn parse_edge_list<R: BufRead>(reader: R, weighted: bool) -> Result<ParsedList> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, Vertex> = HashMap::new();
    let mut seen: HashMap<(Vertex, Vertex), f64> = HashMap::new();
    let mut edges = Vec::new();

    let mut intern = |name: &str, labels: &mut Vec<String>| -> Vertex {
        if let Some(&i) = index.get(name) {
            return i;
        }
        let i = labels.len();
        labels.push(name.to_string());
        index.insert(name.to_string(), i);
        i
    };

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let expected = if weighted { 3 } else { 2 };

        match tokens.len() {
            0 => continue,
            1 => {
                intern(tokens[0], &mut labels);
                continue;
            }
            len if len != expected => {
                return Err(Error::Malformed {
                    line: lineno,
                    reason: format!(
                        "expected {expected} tokens ({}), found {len}",
                        if weighted { "u v length" } else { "u v" }
                    ),
                });
            }
            _ => {}
        }

        let weight = if weighted {
            let raw = tokens[2];
            let w: f64 = raw.parse().map_err(|_| Error::Malformed {
                line: lineno,
                reason: format!("weight `{raw}` is not a number"),
            })?;
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::Malformed {
                    line: lineno,
                    reason: format!("weight `{raw}` must be a positive finite number"),
                });
            }
            w
        } else {
            1.0
        };

        if tokens[0] == tokens[1] {
            return Err(Error::SelfLoop {
                line: lineno,
                label: tokens[0].to_string(),
            });
        }
        let u = intern(tokens[0], &mut labels);
        let v = intern(tokens[1], &mut labels);
        match seen.entry((u.min(v), u.max(v))) {
            Entry::Occupied(e) => {
                if weighted && *e.get() != weight {
                    return Err(Error::ConflictingWeight {
                        line: lineno,
                        u: tokens[0].to_string(),
                        v: tokens[1].to_string(),
                        first: *e.get(),
                        second: weight,
                    });
                }
            }
            Entry::Vacant(e) => {
                e.insert(weight);
                edges.push((u, v, weight));
            }
        }
    }

    Ok(ParsedList { labels, edges })
}

/// Reads an unweighted edge list.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let parsed = parse_edge_list(reader, false)?;
    Graph::from_edges(
        parsed.labels,
        parsed.edges.into_iter().map(|(u, v, _)| (u, v)),
    )
}

/// Reads a weighted edge list (`u v length`).
pub fn load_street_network<R: BufRead>(reader: R) -> Result<StreetNetwork> {
    let parsed = parse_edge_list(reader, true)?;
    StreetNetwork::from_weighted_edges(parsed.labels, parsed.edges)
}

/// Canonical text form: one line per edge with endpoints in label order,
/// isolated vertices as single-token lines, all lines sorted.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut records: Vec<(&str, Option<&str>)> = Vec::with_capacity(graph.edge_count());
    for (u, v) in graph.edges() {
        let (a, b) = (graph.label(u), graph.label(v));
        records.push(if a <= b { (a, Some(b)) } else { (b, Some(a)) });
    }
    for v in 0..graph.n() {
        if graph.neighbors(v).is_empty() {
            records.push((graph.label(v), None));
        }
    }
    records.sort_unstable();

    let mut out = String::new();
    for (a, b) in records {
        match b {
            Some(b) => writeln!(out, "{a} {b}"),
            None => writeln!(out, "{a}"),
        }
        .expect("writing to a String cannot fail");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<Graph> {
        load_edge_list(text.as_bytes())
    }

    #[test]
    fn parses_path() {
        let g = load("a b\nb c\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        let b = g.index_of("b").unwrap();
        assert_eq!(g.degree(b).unwrap(), 2);
        assert_eq!(g.degree(g.index_of("a").unwrap()).unwrap(), 1);
        g.validate().unwrap();
    }

    #[test]
    fn parses_weighted_path() {
        let s = load_street_network("a b 300\nb c 300\n".as_bytes()).unwrap();
        assert_eq!(s.graph().n(), 3);
        assert_eq!(s.length(0, 1), Some(300.0));
        assert_eq!(s.length(2, 1), Some(300.0));
        assert_eq!(s.length(0, 2), None);
    }

    #[test]
    fn rejects_self_loop_with_line_number() {
        let err = load("a a\n").unwrap_err();
        assert!(matches!(err, Error::SelfLoop { line: 1, .. }), "{err}");
        let err = load("# header\na b\nc c\n").unwrap_err();
        assert!(matches!(err, Error::SelfLoop { line: 3, .. }), "{err}");
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            load("a b c\n"),
            Err(Error::Malformed { line: 1, .. })
        ));
        let weighted = |t: &str| load_street_network(t.as_bytes());
        assert!(matches!(
            weighted("a b\n"),
            Err(Error::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            weighted("a b x\n"),
            Err(Error::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            weighted("a b 0\n"),
            Err(Error::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            weighted("a b -3\n"),
            Err(Error::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            weighted("a b NaN\n"),
            Err(Error::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = load("a b\nb a\na b # again\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        let s = load_street_network("a b 5\nb a 5\n".as_bytes()).unwrap();
        assert_eq!(s.graph().edge_count(), 1);
    }

    #[test]
    fn conflicting_weights_are_errors() {
        let err = load_street_network("a b 5\nc d 1\nb a 6\n".as_bytes()).unwrap_err();
        assert!(
            matches!(err, Error::ConflictingWeight { line: 3, .. }),
            "{err}"
        );
    }

    #[test]
    fn degree_out_of_range() {
        let g = Graph::with_vertices(1, []).unwrap();
        assert_eq!(g.degree(0).unwrap(), 0);
        assert!(matches!(
            g.degree(1),
            Err(Error::VertexOutOfRange { vertex: 1, n: 1 })
        ));
    }

    #[test]
    fn canonical_output() {
        assert_eq!(write_edge_list(&load("b c\na b\n").unwrap()), "a b\nb c\n");
        assert_eq!(write_edge_list(&load("").unwrap()), "");
        assert_eq!(
            write_edge_list(&load("c b\nc a\nb a\n").unwrap()),
            "a b\na c\nb c\n"
        );
    }

    #[test]
    fn isolated_vertices_survive_round_trip() {
        let g = load("a b\nz\n").unwrap();
        assert_eq!(g.n(), 3);
        let text = write_edge_list(&g);
        assert_eq!(text, "a b\nz\n");
        assert_eq!(load(&text).unwrap().n(), 3);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        let labels = || vec!["a".to_string(), "b".to_string()];
        assert!(Graph::from_edges(labels(), [(0, 0)]).is_err());
        assert!(Graph::from_edges(labels(), [(0, 2)]).is_err());
        assert!(Graph::from_edges(vec!["a".into(), "a".into()], []).is_err());
        assert!(Graph::from_edges(vec!["a b".into()], []).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges() {
        let g = load("a b\nb c\nc d\na c\n").unwrap();
        let keep = g.resolve_labels(["a", "c", "d"]).unwrap();
        let h = g.induced_subgraph(&keep).unwrap();
        assert_eq!(write_edge_list(&h), "a c\nc d\n");
    }
}
