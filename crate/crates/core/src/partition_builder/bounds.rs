//! Lower bounds on the largest Laplacian eigenvalue and the exact
//! independence and domination numbers behind two of them.

use serde::Serialize;

use crate::graph::Graph;
use crate::rational::{self, Rational};

/// Largest `n` for which α and γ are computed by default.
pub const DEFAULT_EXACT_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBounds {
    /// `Δ + 1`; needs at least one edge.
    pub delta_plus_1: Option<usize>,
    /// `⌈2m/n⌉ + 1`, valid for every graph with the same `n` and `m ≥ 1`.
    pub ceil_davg_plus_1: Option<usize>,
    pub alpha: Option<usize>,
    #[serde(serialize_with = "rational::serialize_opt")]
    pub n_over_alpha: Option<Rational>,
    pub gamma: Option<usize>,
    pub floor_n_over_gamma: Option<usize>,
}

impl LowerBounds {
    /// The strongest bound for this graph, or 0 for an edgeless graph
    /// (whose `λ1` is 0 and which the α and γ bounds do not cover).
    pub fn best(&self) -> f64 {
        if self.delta_plus_1.is_none() {
            return 0.0;
        }
        [
            self.delta_plus_1.map(|v| v as f64),
            self.n_over_alpha.as_ref().map(rational::to_f64),
            self.floor_n_over_gamma.map(|v| v as f64),
        ]
        .into_iter()
        .flatten()
        .fold(0.0, f64::max)
    }
}

/// All bounds for `g`; α and γ are skipped (`None`) when `n > exact_cap`.
pub fn lower_bounds(g: &Graph, exact_cap: usize) -> LowerBounds {
    let n = g.n();
    let m = g.edge_count();
    let alpha = independence_number(g, exact_cap);
    let gamma = domination_number(g, exact_cap);
    LowerBounds {
        delta_plus_1: (m > 0).then(|| g.max_degree() + 1),
        ceil_davg_plus_1: (m > 0).then(|| (2 * m).div_ceil(n) + 1),
        alpha,
        n_over_alpha: alpha.map(|a| Rational::new(n as i64, a as i64)),
        gamma,
        floor_n_over_gamma: gamma.map(|c| n / c),
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).fold(0u64, |acc, u| acc | 1 << u)).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Exact α by maximum clique on the complement with a greedy-coloring bound.
pub fn independence_number(g: &Graph, cap: usize) -> Option<usize> {
    let n = g.n();
    if n > cap.min(64) {
        return None;
    }
    let all = full_mask(n);
    let co: Vec<u64> = adjacency_masks(g).iter().enumerate().map(|(v, a)| !a & all & !(1 << v)).collect();
    let mut best = 0;
    expand_clique(&co, all, 0, &mut best);
    Some(best)
}

/// Vertices of `cand` in color-class order with their color numbers.
fn color_order(adj: &[u64], cand: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            out.push((v, color));
        }
    }
    out
}

fn expand_clique(adj: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    let order = color_order(adj, cand);
    for &(v, color) in order.iter().rev() {
        if size + color <= *best {
            return;
        }
        expand_clique(adj, cand & adj[v], size + 1, best);
        cand &= !(1 << v);
    }
}

/// Exact γ by iterative deepening over the closed neighborhood of the
/// undominated vertex with the fewest dominators.
pub fn domination_number(g: &Graph, cap: usize) -> Option<usize> {
    let n = g.n();
    if n > cap.min(64) {
        return None;
    }
    let closed: Vec<u64> = adjacency_masks(g).iter().enumerate().map(|(v, a)| a | 1 << v).collect();
    let widest = closed.iter().map(|c| c.count_ones()).max().unwrap_or(1) as usize;
    let all = full_mask(n);
    let start = n.div_ceil(widest).max(1);
    (start..=n).find(|&k| dominate(&closed, all, k, widest))
}

fn dominate(closed: &[u64], undominated: u64, budget: usize, widest: usize) -> bool {
    if undominated == 0 {
        return true;
    }
    if budget == 0 || undominated.count_ones() as usize > budget * widest {
        return false;
    }
    let mut rest = undominated;
    let mut pick = (usize::MAX, 0);
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let options = closed[v].count_ones() as usize;
        if options < pick.0 {
            pick = (options, v);
        }
    }
    let mut choices = closed[pick.1];
    while choices != 0 {
        let u = choices.trailing_zeros() as usize;
        choices &= choices - 1;
        if dominate(closed, undominated & !closed[u], budget - 1, widest) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Partition;
    use crate::spectral;

    /// α and γ by trying every vertex subset.
    fn brute_alpha_gamma(g: &Graph) -> (usize, usize) {
        let n = g.n();
        let (mut alpha, mut gamma) = (0, n);
        for s in 0u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
            let independent = vs.iter().all(|&a| vs.iter().all(|&b| !g.has_edge(a, b)));
            if independent {
                alpha = alpha.max(vs.len());
            }
            let dominating = (0..n).all(|v| s >> v & 1 == 1 || g.neighbors(v).any(|u| s >> u & 1 == 1));
            if dominating {
                gamma = gamma.min(vs.len());
            }
        }
        (alpha, gamma)
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<_> = Graph::empty(n).unwrap().pairs().collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            Graph::from_edges(n, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p)).unwrap()
        })
    }

    #[test]
    fn k6_k3_values() {
        let g = Graph::union_of_complete(&Partition::new(vec![6, 3]).unwrap());
        let b = lower_bounds(&g, DEFAULT_EXACT_CAP);
        assert_eq!(b.alpha, Some(2));
        assert_eq!(b.n_over_alpha, Some(Rational::new(9, 2)));
        assert_eq!(b.gamma, Some(2));
        assert_eq!(b.floor_n_over_gamma, Some(4));
        assert_eq!(b.delta_plus_1, Some(6));
        assert_eq!(b.ceil_davg_plus_1, Some(5));
        assert_eq!(brute_alpha_gamma(&g), (2, 2));
    }

    #[test]
    fn empty_graph_degenerate() {
        let g = Graph::empty(7).unwrap();
        let b = lower_bounds(&g, DEFAULT_EXACT_CAP);
        assert_eq!((b.alpha, b.gamma), (Some(7), Some(7)));
        assert_eq!(b.n_over_alpha, Some(Rational::from_integer(1)));
        assert_eq!(b.floor_n_over_gamma, Some(1));
        assert_eq!((b.delta_plus_1, b.ceil_davg_plus_1), (None, None));
        assert_eq!(b.best(), 0.0);
    }

    #[test]
    fn equal_cliques_meet_n_over_alpha() {
        for (k, s) in [(2, 3), (3, 4), (4, 5), (5, 2)] {
            let g = Graph::union_of_complete(&Partition::new(vec![s; k]).unwrap());
            let b = lower_bounds(&g, DEFAULT_EXACT_CAP);
            assert_eq!(b.alpha, Some(k));
            assert!((rational::to_f64(b.n_over_alpha.as_ref().unwrap()) - spectral::lambda1(&g)).abs() < 1e-9);
        }
    }

    #[test]
    fn exact_solvers_match_brute_force_n6() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                let (a, c) = brute_alpha_gamma(&g);
                assert_eq!(independence_number(&g, 32), Some(a), "{g:?}");
                assert_eq!(domination_number(&g, 32), Some(c), "{g:?}");
            }
        }
    }

    #[test]
    fn bounds_hold_exhaustively_n6() {
        for n in 2..=6 {
            for g in all_graphs(n).filter(|g| g.edge_count() > 0) {
                let l1 = spectral::lambda1(&g);
                let b = lower_bounds(&g, 32);
                assert!(l1 >= b.best() - 1e-9, "{g:?}: {l1} < {:?}", b);
                assert!(l1 >= b.ceil_davg_plus_1.unwrap() as f64 - 1e-9);
            }
        }
    }

    #[test]
    fn cap_reports_not_computed() {
        let g = Graph::empty(40).unwrap();
        assert_eq!(independence_number(&g, DEFAULT_EXACT_CAP), None);
        assert_eq!(domination_number(&g, DEFAULT_EXACT_CAP), None);
        assert_eq!(independence_number(&g, 40), Some(40));
    }

    #[test]
    fn larger_instances() {
        // Petersen graph: α = 4, γ = 3
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let p = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(independence_number(&p, 32), Some(4));
        assert_eq!(domination_number(&p, 32), Some(3));
        // C_30: α = 15, γ = 10
        let c = Graph::from_edges(30, (0..30).map(|i| (i, (i + 1) % 30))).unwrap();
        assert_eq!(independence_number(&c, 32), Some(15));
        assert_eq!(domination_number(&c, 32), Some(10));
    }
}
