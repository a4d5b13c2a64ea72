//! Isomorph-free generation by canonical augmentation, one edge at a time.
//!
//! A child `H = G + e` is kept iff removing its canonical edge `e*` (the
//! edge whose canonical image is the lexicographically last pair) gives a
//! graph isomorphic to `G`. Children of one parent are deduplicated by
//! canonical form, and non-edges are only tried once per orbit of the known
//! automorphisms of `G`.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use super::canon::{self, Adj};
use super::{Best, DegreeCap, Method, SearchReport, CANONICAL_MAX_N};
use crate::choose2;
use crate::error::{Error, Result};
use crate::partition_builder::algorithm1;
use crate::spectral;

struct Node {
    adj: Adj,
    edges: usize,
    form: u64,
    generators: Vec<Vec<u8>>,
}

impl Node {
    fn root(n: usize) -> Self {
        let adj = vec![0u16; n];
        let c = canon::canonical(&adj);
        Self { adj, edges: 0, form: c.form, generators: c.generators }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Accepted children of `node`; `pruned` counts non-edges dropped by the cap.
fn children(node: &Node, cap: Option<usize>, pruned: &mut u64) -> Vec<Node> {
    let n = node.adj.len();
    let mut candidates = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if node.adj[i] >> j & 1 == 1 {
                continue;
            }
            if cap.is_some_and(|c| node.degree(i) >= c || node.degree(j) >= c) {
                *pruned += 1;
                continue;
            }
            candidates.push((i, j));
        }
    }
    // one representative per orbit of pairs
    let mut parent: Vec<usize> = (0..choose2(n)).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in &node.generators {
        for &(i, j) in &candidates {
            let a = find(&mut parent, pair_index(n, i, j));
            let b = find(&mut parent, pair_index(n, g[i] as usize, g[j] as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut seen_orbits = HashSet::new();
    let mut seen_forms = HashSet::new();
    let mut out = Vec::new();
    for (i, j) in candidates {
        if !seen_orbits.insert(find(&mut parent, pair_index(n, i, j))) {
            continue;
        }
        let mut adj = node.adj.clone();
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
        let c = canon::canonical(&adj);
        if !seen_forms.insert(c.form) {
            continue;
        }
        let pos = c.positions();
        let image = |u: usize, v: usize| {
            let (a, b) = (pos[u], pos[v]);
            (a.min(b), a.max(b))
        };
        let (mut star, mut star_image) = ((i, j), image(i, j));
        for (u, row) in adj.iter().enumerate() {
            for v in (u + 1)..n {
                if row >> v & 1 == 1 && image(u, v) > star_image {
                    star = (u, v);
                    star_image = image(u, v);
                }
            }
        }
        let accept = if star == (i, j) {
            true
        } else {
            let deg = |v: usize| adj[v].count_ones();
            let sorted = |a: u32, b: u32| (a.min(b), a.max(b));
            if sorted(deg(i), deg(j)) != sorted(deg(star.0), deg(star.1)) {
                false
            } else {
                let mut minus = adj.clone();
                minus[star.0] &= !(1 << star.1);
                minus[star.1] &= !(1 << star.0);
                canon::canonical(&minus).form == node.form
            }
        };
        if accept {
            out.push(Node { adj, edges: node.edges + 1, form: c.form, generators: c.generators });
        }
    }
    out
}

#[derive(Default)]
struct Acc {
    best: Best,
    examined: u64,
    pruned: u64,
    per_edges: Vec<u64>,
}

fn dfs(node: &Node, target: usize, cap: Option<usize>, evaluate: bool, acc: &mut Acc) {
    acc.per_edges[node.edges] += 1;
    if node.edges == target {
        if evaluate {
            let delta = node.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0);
            if target > 0 && (delta + 1) as f64 > acc.best.value() + spectral::INT_TOL {
                acc.pruned += 1;
            } else {
                let l1 = spectral::lambda1(&canon::to_graph(&node.adj));
                acc.examined += 1;
                acc.best.offer(l1, || node.form);
            }
        }
        return;
    }
    for child in children(node, cap, &mut acc.pruned) {
        dfs(&child, target, cap, evaluate, acc);
    }
}

/// Runs the generation down to `target` edges, splitting at depth 2 across
/// workers and merging in subtree order.
fn run(n: usize, target: usize, cap: Option<usize>, evaluate: bool) -> Acc {
    let root = Node::root(n);
    let mut top = Acc { per_edges: vec![0; target + 1], ..Default::default() };
    let mut frontier = vec![root];
    while let Some(depth) = frontier.first().map(|f| f.edges) {
        if depth >= target.min(2) {
            break;
        }
        let mut next = Vec::new();
        for node in &frontier {
            top.per_edges[node.edges] += 1;
            next.extend(children(node, cap, &mut top.pruned));
        }
        frontier = next;
    }
    let parts: Vec<Acc> = frontier
        .par_iter()
        .map(|node| {
            let mut acc = Acc { per_edges: vec![0; target + 1], ..Default::default() };
            dfs(node, target, cap, evaluate, &mut acc);
            acc
        })
        .collect();
    for p in parts {
        top.best.merge(&p.best);
        top.examined += p.examined;
        top.pruned += p.pruned;
        for (a, b) in top.per_edges.iter_mut().zip(&p.per_edges) {
            *a += b;
        }
    }
    top
}

/// Largest-degree cap actually used for `(n, m)` under `cap`.
pub fn resolve_cap(n: usize, m: usize, cap: DegreeCap) -> Result<Option<usize>> {
    match cap {
        DegreeCap::Off => Ok(None),
        DegreeCap::At(0) if m > 0 => Err(Error::Precondition("degree cap 0 admits no graph with edges".into())),
        DegreeCap::At(c) => Ok(Some(c)),
        DegreeCap::Auto => {
            let built = algorithm1(n, m)?;
            Ok((m > 0 && built.m_actual == m).then(|| built.lambda1 - 1))
        }
    }
}

pub fn search_canonical(n: usize, m: usize, cap: DegreeCap) -> Result<SearchReport> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > CANONICAL_MAX_N {
        return Err(Error::SizeCap { what: "search_canonical", n, cap: CANONICAL_MAX_N });
    }
    let total = choose2(n);
    if m > total {
        return Err(Error::TooManyEdges { n, m, max: total });
    }
    let start = Instant::now();
    let cap = resolve_cap(n, m, cap)?;
    let acc = run(n, m, cap, true);
    if acc.best.value().is_infinite() {
        return Err(Error::Precondition(format!("no graph with n = {n}, m = {m} respects degree cap {cap:?}")));
    }
    Ok(acc.best.into_report(n, m, acc.examined, acc.pruned, Method::Canonical, cap, start.elapsed()))
}

/// Number of non-isomorphic graphs on `n` vertices with `k` edges, for each `k`.
pub fn count_canonical(n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > CANONICAL_MAX_N {
        return Err(Error::SizeCap { what: "count_canonical", n, cap: CANONICAL_MAX_N });
    }
    Ok(run(n, choose2(n), None, false).per_edges)
}
