//! Deterministic graph families with fixed vertex labelings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Petersen,
    Hypercube,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Petersen,
        Family::Hypercube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Petersen => "petersen",
            Family::Hypercube => "hypercube",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Petersen => 0,
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Generates a member of `family`.
///
/// Labelings:
/// - `path(k)`: vertices `0..k`, edges `{i, i+1}`.
/// - `cycle(k)`, `k ≥ 3`: the path plus `{0, k−1}`.
/// - `complete(k)`: all pairs on `0..k`.
/// - `complete_bipartite(a, b)`: parts `0..a` and `a..a+b`.
/// - `star(k)`: `K_{1,k}` with center 0 and leaves `1..=k`.
/// - `petersen()`: Kneser graph K(5,2); vertex `i` is the `i`-th 2-subset of
///   `{0,…,4}` in lexicographic order, adjacent iff disjoint.
/// - `hypercube(q)`: vertices `0..2^q`, adjacent iff labels differ in one bit.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    let bad = |reason: String| Error::InvalidParameter {
        family: family.name().to_string(),
        reason,
    };
    if params.len() != family.arity() {
        return Err(bad(format!(
            "expected {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    match family {
        Family::Path => {
            let k = params[0];
            if k < 1 {
                return Err(bad("path needs k ≥ 1".into()));
            }
            Graph::new(k, (1..k).map(|i| (i - 1, i)))
        }
        Family::Cycle => {
            let k = params[0];
            if k < 3 {
                return Err(bad("cycle needs k ≥ 3".into()));
            }
            Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
        }
        Family::Complete => {
            let k = params[0];
            if k < 1 {
                return Err(bad("complete needs k ≥ 1".into()));
            }
            Graph::new(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))))
        }
        Family::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            if a < 1 || b < 1 {
                return Err(bad("complete_bipartite needs both parts ≥ 1".into()));
            }
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Star => {
            let k = params[0];
            if k < 1 {
                return Err(bad("star needs k ≥ 1".into()));
            }
            Graph::new(k + 1, (1..=k).map(|v| (0, v)))
        }
        Family::Petersen => {
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
                .collect();
            let disjoint = |x: (usize, usize), y: (usize, usize)| {
                x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
            };
            let edges: Vec<_> = (0..10)
                .flat_map(|u| (u + 1..10).map(move |v| (u, v)))
                .filter(|&(u, v)| disjoint(pairs[u], pairs[v]))
                .collect();
            Graph::new(10, edges)
        }
        Family::Hypercube => {
            let q = params[0];
            if !(1..=16).contains(&q) {
                return Err(bad("hypercube needs 1 ≤ q ≤ 16".into()));
            }
            let n = 1usize << q;
            Graph::new(
                n,
                (0..n).flat_map(|u| {
                    (0..q)
                        .map(move |bit| (u, u ^ (1 << bit)))
                        .filter(|&(u, v)| u < v)
                }),
            )
        }
    }
}

/// Parses a `family:p1,p2` specification, e.g. `path:4`, `complete_bipartite:2,3`,
/// `petersen`.
pub fn generate_from_spec(spec: &str) -> Result<Graph> {
    let (name, rest) = match spec.split_once(':') {
        Some((name, rest)) => (name, rest),
        None => (spec, ""),
    };
    let family: Family = name.trim().parse()?;
    let params = rest
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>().map_err(|_| Error::InvalidParameter {
                family: family.name().to_string(),
                reason: format!("`{s}` is not a nonnegative integer"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    generate(family, &params)
}
