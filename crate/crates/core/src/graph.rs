//! Simple connected graphs and their combinatorial data: adjacency, the
//! Laplacian `L = K − A`, hop distances, distance matrices `A_i` and the
//! per-vertex counts `k_i(u) = |Γ_i(u)|`.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

/// A finite, simple, connected, undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges. Fails on self-loops,
    /// out-of-range endpoints, `n = 0`, and disconnected input.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        let g = Graph {
            n,
            edges,
            neighbors,
        };
        if let Some(unreachable) = g.first_unreachable() {
            return Err(Error::Disconnected { unreachable });
        }
        Ok(g)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let dist = self.bfs(0);
        dist.iter().position(|d| d.is_none())
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&v).is_ok()
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.neighbors.iter().all(|a| a.len() == k).then_some(k)
    }

    /// Relabels vertex `u` as `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Canonical edge-list text, one sorted `u v` per line. The `n <count>`
    /// header only appears for the single vertex, the one connected graph whose
    /// order cannot be inferred from its edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if self.edges.is_empty() {
            out.push_str(&format!("n {}\n", self.n));
        }
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the edge-list text format.
///
/// Each non-blank line is `u v` with nonnegative integer endpoints. An optional
/// first data line `n <count>` fixes the vertex count; otherwise it is the
/// largest index plus one. Everything after `#` on a line is ignored.
/// Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_data = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let malformed = |reason: &str| Error::Malformed {
            line: line_no,
            reason: reason.to_string(),
        };
        if tokens[0] == "n" {
            if seen_data {
                return Err(malformed("vertex-count header must precede all edges"));
            }
            if tokens.len() != 2 {
                return Err(malformed("expected `n <count>`"));
            }
            let count = tokens[1]
                .parse::<usize>()
                .map_err(|_| malformed("vertex count is not a nonnegative integer"))?;
            if count == 0 {
                return Err(malformed("vertex count must be positive"));
            }
            declared = Some(count);
            seen_data = true;
            continue;
        }
        seen_data = true;
        if tokens.len() != 2 {
            return Err(malformed("expected two vertex indices `u v`"));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| malformed(&format!("`{t}` is not a nonnegative integer")))
        };
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
        }
        edges.push((u, v));
    }

    let n = match declared {
        Some(n) => n,
        None => match edges.iter().map(|&(u, v)| u.max(v)).max() {
            Some(m) => m + 1,
            None => return Err(Error::EmptyInput),
        },
    };
    Graph::new(n, edges)
}

/// Laplacian `L = K − A`.
pub fn laplacian_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper_fn(g.order(), |u, v| {
        if u == v {
            g.degree(u) as f64
        } else if g.has_edge(u, v) {
            -1.0
        } else {
            0.0
        }
    })
}

/// The (0,1)-adjacency matrix `A`.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper_fn(g.order(), |u, v| if g.has_edge(u, v) { 1.0 } else { 0.0 })
}

/// Mean degree `k̄` and mean squared degree `k²̄`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub mean_degree: f64,
    pub mean_square_degree: f64,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let n = g.order() as f64;
    let degrees = g.degrees();
    let sum: usize = degrees.iter().sum();
    let sum_sq: usize = degrees.iter().map(|k| k * k).sum();
    DegreeStats {
        mean_degree: sum as f64 / n,
        mean_square_degree: sum_sq as f64 / n,
    }
}

/// All-pairs hop distances with the derived distance-class counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<usize>,
    diameter: usize,
    /// `counts[u][i] = k_i(u)` for `i = 0..=diameter`.
    counts: Vec<Vec<usize>>,
}

impl DistanceData {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// `k_i(u) = |Γ_i(u)|`; zero for `i > D`.
    pub fn excess_count(&self, u: usize, i: usize) -> usize {
        self.counts[u].get(i).copied().unwrap_or(0)
    }

    /// `k_i(u)` for `i = 0..=D`.
    pub fn counts(&self, u: usize) -> &[usize] {
        &self.counts[u]
    }

    /// The 0/1 distance matrix `A_i`; the zero matrix when `i > D`.
    pub fn distance_matrix(&self, i: usize) -> SymMatrix {
        SymMatrix::from_upper_fn(self.n, |u, v| if self.dist(u, v) == i { 1.0 } else { 0.0 })
    }
}

/// BFS from every vertex.
pub fn distance_data(g: &Graph) -> DistanceData {
    let n = g.order();
    let mut dist = vec![0usize; n * n];
    for u in 0..n {
        for (v, d) in g.bfs(u).into_iter().enumerate() {
            dist[u * n + v] = d.expect("graph is connected by construction");
        }
    }
    let diameter = dist.iter().copied().max().unwrap_or(0);
    let counts = (0..n)
        .map(|u| {
            let mut c = vec![0usize; diameter + 1];
            for v in 0..n {
                c[dist[u * n + v]] += 1;
            }
            c
        })
        .collect();
    DistanceData {
        n,
        dist,
        diameter,
        counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3").unwrap()
    }

    #[test]
    fn parses_path() {
        let g = p4();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_edge_list("0 1\n0 1").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edge_count(), 1);
        let g = parse_edge_list("1 0\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_edge_list("0 1\n2 3"),
            Err(Error::Disconnected { unreachable: 2 })
        );
        assert_eq!(parse_edge_list(""), Err(Error::EmptyInput));
        assert_eq!(
            parse_edge_list("# only a comment\n\n"),
            Err(Error::EmptyInput)
        );
        assert_eq!(parse_edge_list("0 0"), Err(Error::SelfLoop(0)));
        assert_eq!(
            parse_edge_list("n 3\n0 1\n1 3"),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            parse_edge_list("0 1\nx 2"),
            Err(Error::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(Error::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\nn 2"),
            Err(Error::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("-1 2"),
            Err(Error::Malformed { .. })
        ));
        // declared isolated vertex
        assert_eq!(
            parse_edge_list("n 3\n0 1"),
            Err(Error::Disconnected { unreachable: 2 })
        );
    }

    #[test]
    fn header_and_comments() {
        let g = parse_edge_list("# P3\nn 3  # three vertices\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 2);
        let k1 = parse_edge_list("n 1").unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = p4();
        assert_eq!(g.to_edge_list(), "0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!(k1.to_edge_list(), "n 1\n");
        assert_eq!(parse_edge_list(&k1.to_edge_list()).unwrap(), k1);
    }

    #[test]
    fn matrices() {
        let p2 = parse_edge_list("0 1").unwrap();
        assert_eq!(laplacian_matrix(&p2).as_slice(), &[1.0, -1.0, -1.0, 1.0]);
        assert_eq!(adjacency_matrix(&p2).as_slice(), &[0.0, 1.0, 1.0, 0.0]);

        let l = laplacian_matrix(&p4());
        let diag: Vec<f64> = (0..4).map(|i| l.get(i, i)).collect();
        assert_eq!(diag, vec![1.0, 2.0, 2.0, 1.0]);
        assert_eq!(l.get(0, 1), -1.0);
        assert_eq!(l.get(0, 2), 0.0);
        for u in 0..4 {
            assert_eq!(l.row(u).iter().sum::<f64>(), 0.0);
        }

        let k3 = parse_edge_list("0 1\n1 2\n0 2").unwrap();
        let l = laplacian_matrix(&k3);
        let a = adjacency_matrix(&k3);
        for u in 0..3 {
            for v in 0..3 {
                let (le, ae) = if u == v { (2.0, 0.0) } else { (-1.0, 1.0) };
                assert_eq!(l.get(u, v), le);
                assert_eq!(a.get(u, v), ae);
            }
        }
    }

    #[test]
    fn distances_of_path() {
        let dd = distance_data(&p4());
        assert_eq!(dd.diameter(), 3);
        assert_eq!(dd.excess_count(0, 3), 1);
        assert_eq!(dd.excess_count(1, 3), 0);
        assert_eq!(dd.excess_count(1, 2), 1);
        assert_eq!(dd.excess_count(0, 7), 0);
        assert_eq!(dd.dist(0, 3), 3);
        assert_eq!(dd.distance_matrix(0), SymMatrix::identity(4));
        assert_eq!(dd.distance_matrix(1), adjacency_matrix(&p4()));
    }

    #[test]
    fn degree_statistics() {
        let s = degree_stats(&p4());
        assert_eq!(s.mean_degree, 1.5);
        assert_eq!(s.mean_square_degree, 2.5);
        let star = parse_edge_list("0 1\n0 2\n0 3").unwrap();
        let s = degree_stats(&star);
        assert_eq!(s.mean_degree, 1.5);
        assert_eq!(s.mean_square_degree, 3.0);
    }
}
