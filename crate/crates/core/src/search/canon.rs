//! Canonical labeling for small graphs: equitable refinement by neighbor
//! counts, then individualization backtracking with automorphism pruning.
//!
//! A labeling is an ordering of the vertices; its form is the upper-triangle
//! adjacency bitstring read in lexicographic pair order, pair `(0,1)` as the
//! most significant bit. The canonical form is the least form over the
//! search tree.

use crate::graph::Graph;

/// Largest `n` whose upper triangle fits in a `u64`.
pub(crate) const MAX_N: usize = 11;

pub(crate) type Adj = Vec<u16>;

pub(crate) fn adjacency(g: &Graph) -> Adj {
    (0..g.n()).map(|v| g.neighbors(v).fold(0u16, |a, u| a | 1 << u)).collect()
}

pub(crate) fn to_graph(adj: &[u16]) -> Graph {
    let n = adj.len();
    Graph::from_edges(n, (0..n).flat_map(|i| ((i + 1)..n).filter(move |&j| adj[i] >> j & 1 == 1).map(move |j| (i, j))))
        .expect("adjacency rows are in range")
}

pub(crate) fn form_of(adj: &[u16], order: &[u8]) -> u64 {
    let n = order.len();
    let mut form = 0u64;
    for p in 0..n {
        let row = adj[order[p] as usize];
        for &w in &order[p + 1..] {
            form = form << 1 | (row >> w & 1) as u64;
        }
    }
    form
}

/// The graph whose identity labeling has the given form.
pub(crate) fn decode(n: usize, form: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if form >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("decoded pairs are in range")
}

pub(crate) struct Canon {
    pub form: u64,
    /// Position → vertex for a labeling attaining `form`.
    pub order: Vec<u8>,
    /// Automorphisms found along the way (vertex → vertex); they generate
    /// a subgroup of the automorphism group.
    pub generators: Vec<Vec<u8>>,
}

impl Canon {
    /// Vertex → position.
    pub fn positions(&self) -> Vec<u8> {
        let mut pos = vec![0u8; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v as usize] = p as u8;
        }
        pos
    }
}

pub(crate) fn canonical_form(g: &Graph) -> u64 {
    canonical(&adjacency(g)).form
}

pub(crate) fn canonical(adj: &[u16]) -> Canon {
    let n = adj.len();
    assert!(n <= MAX_N, "canonical labeling supports n <= {MAX_N}");
    let mut cells = vec![(0..n as u8).collect::<Vec<u8>>()];
    refine(adj, &mut cells);
    let mut s = Searcher { adj, first: None, best: None, generators: Vec::new() };
    let mut prefix = Vec::new();
    s.search(&cells, &mut prefix);
    let (form, order) = s.best.expect("search visits at least one leaf");
    Canon { form, order, generators: s.generators }
}

/// Splits cells by neighbor counts into every cell until stable. Cell order
/// depends only on the counts, so the result commutes with relabeling.
fn refine(adj: &[u16], cells: &mut Vec<Vec<u8>>) {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0u16, |a, &v| a | 1 << v)).collect();
        let mut next = Vec::with_capacity(adj.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, u8)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v as usize] & m).count_ones() as u8).collect(), v))
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|x| x.1).collect());
                    start = k;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

struct Searcher<'a> {
    adj: &'a [u16],
    first: Option<(u64, Vec<u8>)>,
    best: Option<(u64, Vec<u8>)>,
    generators: Vec<Vec<u8>>,
}

impl Searcher<'_> {
    fn search(&mut self, cells: &[Vec<u8>], prefix: &mut Vec<u8>) {
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.iter().map(|c| c[0]).collect());
            return;
        };
        let mut tried: Vec<u8> = Vec::new();
        for &v in &cells[t] {
            if !tried.is_empty() && self.same_orbit(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.adj, &mut child);
            prefix.push(v);
            self.search(&child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` shares an orbit with some tried vertex under the known
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[u8], tried: &[u8], v: u8) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<u8> = (0..n as u8).collect();
        fn find(p: &mut [u8], mut x: u8) -> u8 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for g in self.generators.iter().filter(|g| prefix.iter().all(|&u| g[u as usize] == u)) {
            for x in 0..n as u8 {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g[x as usize]));
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&w| find(&mut parent, w) == root)
    }

    fn leaf(&mut self, order: Vec<u8>) {
        let form = form_of(self.adj, &order);
        let Some((first_form, first_order)) = &self.first else {
            self.first = Some((form, order.clone()));
            self.best = Some((form, order));
            return;
        };
        if form == *first_form {
            push_automorphism(&mut self.generators, first_order, &order);
        }
        let (best_form, best_order) = self.best.as_ref().expect("set with first");
        if form == *best_form && best_form != first_form {
            let best_order = best_order.clone();
            push_automorphism(&mut self.generators, &best_order, &order);
        } else if form < *best_form {
            self.best = Some((form, order));
        }
    }
}

/// Records `a[p] ↦ b[p]`, skipping the identity.
fn push_automorphism(gens: &mut Vec<Vec<u8>>, a: &[u8], b: &[u8]) {
    let mut g = vec![0u8; a.len()];
    for (&x, &y) in a.iter().zip(b) {
        g[x as usize] = y;
    }
    if g.iter().enumerate().any(|(i, &x)| i as u8 != x) {
        gens.push(g);
    }
}
