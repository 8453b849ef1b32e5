//! Test corpora: every connected graph on at most seven vertices (one per
//! isomorphism class) and the named families.

#![allow(dead_code)]

use std::collections::HashSet;

use drg_spectral::generators::{generate, Family};
use drg_spectral::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

/// Adjacency bitmasks, one `u8` row per vertex.
type Adj = Vec<u8>;

fn code(adj: &Adj, order: &[usize]) -> u32 {
    let n = order.len();
    let mut code = 0u32;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Largest pair code over all labelings that list vertices by descending
/// `(degree, sum of neighbour degrees)`. The key is isomorphism-invariant, so
/// the maximum is a canonical form.
fn canonical(adj: &Adj) -> u32 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let key: Vec<(u32, u32)> = (0..n)
        .map(|u| {
            let s = (0..n)
                .filter(|&v| adj[u] >> v & 1 == 1)
                .map(|v| deg[v])
                .sum();
            (deg[u], s)
        })
        .collect();
    let mut slots: Vec<(u32, u32)> = key.clone();
    slots.sort_unstable_by(|a, b| b.cmp(a));

    fn search(
        adj: &Adj,
        key: &[(u32, u32)],
        slots: &[(u32, u32)],
        order: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u32,
    ) {
        let p = order.len();
        if p == slots.len() {
            *best = (*best).max(code(adj, order));
            return;
        }
        for v in 0..slots.len() {
            if !used[v] && key[v] == slots[p] {
                used[v] = true;
                order.push(v);
                search(adj, key, slots, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }

    let mut best = 0;
    search(
        adj,
        &key,
        &slots,
        &mut Vec::new(),
        &mut vec![false; n],
        &mut best,
    );
    best
}

fn decode(n: usize, code: u32) -> Adj {
    let mut adj = vec![0u8; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    adj
}

fn connected(adj: &Adj) -> bool {
    let n = adj.len();
    let mut seen: u8 = 1;
    let mut frontier: u8 = 1;
    while frontier != 0 {
        let mut next = 0u8;
        for (u, row) in adj.iter().enumerate() {
            if frontier >> u & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// Canonical codes of all graphs on `n` vertices, for `n = 1..=max`.
pub fn all_graph_classes(max: usize) -> Vec<Vec<u32>> {
    let mut levels: Vec<Vec<u32>> = vec![vec![0]];
    for n in 2..=max {
        let mut seen = HashSet::new();
        for &c in &levels[n - 2] {
            let base = decode(n - 1, c);
            for mask in 0u8..(1 << (n - 1)) {
                let mut adj = base.clone();
                adj.push(mask);
                for (v, row) in adj.iter_mut().enumerate().take(n - 1) {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                seen.insert(canonical(&adj));
            }
        }
        let mut codes: Vec<u32> = seen.into_iter().collect();
        codes.sort_unstable();
        levels.push(codes);
    }
    levels
}

/// One representative per isomorphism class of connected graphs with
/// `1 ≤ n ≤ max`.
pub fn connected_graphs(max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for (idx, codes) in all_graph_classes(max).into_iter().enumerate() {
        let n = idx + 1;
        for c in codes {
            let adj = decode(n, c);
            if !connected(&adj) {
                continue;
            }
            let edges = (0..n).flat_map(|u| {
                let adj = adj.clone();
                (u + 1..n)
                    .filter(move |&v| adj[u] >> v & 1 == 1)
                    .map(move |v| (u, v))
            });
            out.push(Graph::new(n, edges).expect("connected by check"));
        }
    }
    out
}

/// Named families that are distance-regular.
pub fn named_drg_families() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 3..=12 {
        out.push((format!("C{k}"), generate(Family::Cycle, &[k]).unwrap()));
    }
    for k in 2..=8 {
        out.push((format!("K{k}"), generate(Family::Complete, &[k]).unwrap()));
    }
    for m in 1..=4 {
        out.push((
            format!("K{m},{m}"),
            generate(Family::CompleteBipartite, &[m, m]).unwrap(),
        ));
    }
    for q in 2..=3 {
        out.push((format!("Q{q}"), generate(Family::Hypercube, &[q]).unwrap()));
    }
    out.push(("Petersen".into(), generate(Family::Petersen, &[]).unwrap()));
    out
}

/// Named families used as non-distance-regular witnesses.
pub fn named_other_families() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 3..=8 {
        out.push((format!("P{k}"), generate(Family::Path, &[k]).unwrap()));
        out.push((format!("star{k}"), generate(Family::Star, &[k]).unwrap()));
    }
    out.push((
        "K2,3".into(),
        generate(Family::CompleteBipartite, &[2, 3]).unwrap(),
    ));
    out.push((
        "K1,5".into(),
        generate(Family::CompleteBipartite, &[1, 5]).unwrap(),
    ));
    out
}

/// Exhaustive n ≤ 7 corpus plus every named family.
pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = connected_graphs(MAX_EXHAUSTIVE_ORDER)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("exhaustive#{i}(n={})", g.order()), g))
        .collect();
    out.extend(named_drg_families());
    out.extend(named_other_families());
    out
}

/// Random connected graph: a random recursive tree plus each other pair with
/// probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("spanning tree keeps it connected")
}
