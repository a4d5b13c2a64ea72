//! Greedy construction of a union of complete graphs with the least
//! largest eigenvalue for given `n` and `m`, the sufficient conditions for
//! global minimality, lower bounds and certificates.

mod bounds;
mod certify;
mod conditions;

use std::cell::RefCell;
use std::collections::HashMap;

use serde::Serialize;

pub use bounds::{domination_number, independence_number, lower_bounds, LowerBounds, DEFAULT_EXACT_CAP};
pub use certify::{certify, Basis, Certificate, CertificateDetails, CertificateKind, Certification, CertifyOptions};
pub use conditions::{
    check_multi_component_condition, check_two_component_condition, discriminant_equality_scan, MultiComponentCheck,
    TwoComponentCheck, TwoComponentClass,
};

use crate::choose2;
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

/// One greedy step: `count` copies of `K_size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BuildStep {
    pub size: usize,
    pub count: usize,
    pub edges_remaining_before: usize,
    pub vertices_remaining_before: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuildResult {
    pub partition: Partition,
    pub m_desired: usize,
    pub m_actual: usize,
    pub steps: Vec<BuildStep>,
    pub lambda1: usize,
}

impl BuildResult {
    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn shortfall(&self) -> usize {
        self.m_desired - self.m_actual
    }

    pub fn graph(&self) -> Graph {
        Graph::union_of_complete(&self.partition)
    }
}

/// Smallest admissible `x` at `(n, e)`: `ℓ = ⌊e / C(x,2)⌋ ≥ 1` copies of `K_x`
/// fit in `n` vertices and the rest `(n − ℓx, e − ℓ·C(x,2))` is itself
/// exactly completable. `None` when `e` cannot be reached.
#[derive(Default)]
struct Planner {
    memo: HashMap<(usize, usize), Option<usize>>,
}

thread_local! {
    static PLANNER: RefCell<Planner> = RefCell::new(Planner::default());
}

impl Planner {
    fn step(&mut self, n: usize, e: usize) -> Option<usize> {
        if e == 0 {
            return Some(0);
        }
        if let Some(&hit) = self.memo.get(&(n, e)) {
            return hit;
        }
        let mut choice = None;
        for x in 2..=n {
            let c = choose2(x);
            if c > e {
                break;
            }
            let l = e / c;
            if l * x <= n && self.step(n - l * x, e - l * c).is_some() {
                choice = Some(x);
                break;
            }
        }
        self.memo.insert((n, e), choice);
        choice
    }

    fn steps(&mut self, mut n: usize, mut e: usize) -> Vec<BuildStep> {
        let mut steps = Vec::new();
        while e > 0 {
            let x = self.step(n, e).expect("caller checked completability");
            let c = choose2(x);
            let l = e / c;
            steps.push(BuildStep { size: x, count: l, edges_remaining_before: e, vertices_remaining_before: n });
            e -= l * c;
            n -= l * x;
        }
        steps
    }
}

/// Builds the union of complete graphs for `(n, m_desired)`.
///
/// Each step picks the least component size `x` admitting `ℓ ≥ 1` with
/// `ℓ ≤ n_rem / x` and `ℓ·C(x,2) ≤ E_rem < (ℓ+1)·C(x,2)`, restricted to
/// choices after which the remaining edges can still be placed exactly.
/// When no union has exactly `m_desired` edges the largest reachable count
/// below it is built. Unused vertices become `K_1` parts.
pub fn algorithm1(n: usize, m_desired: usize) -> Result<BuildResult> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let max = choose2(n);
    if m_desired > max {
        return Err(Error::TooManyEdges { n, m: m_desired, max });
    }
    let (m_actual, steps) = PLANNER.with_borrow_mut(|planner| {
        let m_actual = (0..=m_desired).rev().find(|&e| planner.step(n, e).is_some()).expect("0 is reachable");
        (m_actual, planner.steps(n, m_actual))
    });
    let sizes: Vec<usize> = steps.iter().flat_map(|s| std::iter::repeat_n(s.size, s.count)).collect();
    let partition = Partition::padded(sizes, n)?;
    debug_assert_eq!(partition.m(), m_actual);
    let lambda1 = if partition.largest() >= 2 { partition.largest() } else { 0 };
    Ok(BuildResult { partition, m_desired, m_actual, steps, lambda1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral;

    fn sizes(n: usize, m: usize) -> Vec<usize> {
        algorithm1(n, m).unwrap().partition.non_singleton_sizes()
    }

    #[test]
    fn table_rows_matched_by_rule() {
        assert_eq!(sizes(9, 10), [4, 3, 2]);
        assert_eq!(sizes(9, 12), [4, 4]);
        assert_eq!(sizes(10, 16), [5, 4]);
        assert_eq!(sizes(10, 20), [5, 5]);
        assert_eq!(sizes(15, 34), [7, 5, 3]);
        assert_eq!(sizes(20, 22), [4, 4, 4, 2, 2, 2, 2]);
        assert_eq!(sizes(20, 50), [8, 6, 4, 2]);
        assert_eq!(sizes(25, 132), [12, 12]);
        assert_eq!(sizes(32, 136), [10, 10, 10, 2]);
    }

    #[test]
    fn other_instances() {
        assert_eq!(sizes(9, 18), [6, 3]);
        assert_eq!(sizes(24, 168), [18, 6]);
        assert_eq!(sizes(8, 16), [6, 2]);
        assert_eq!(sizes(7, 7), [4, 2]);
        assert_eq!(sizes(9, 9), [3, 3, 3]);
        assert_eq!(sizes(8, 12), [4, 4]);
    }

    #[test]
    fn padding_and_lambda1() {
        let r = algorithm1(25, 132).unwrap();
        assert_eq!(r.partition.sizes(), [12, 12, 1]);
        assert_eq!(r.lambda1, 12);
        assert_eq!(r.m_actual, 132);
        let r = algorithm1(5, 0).unwrap();
        assert_eq!(r.partition.sizes(), [1; 5]);
        assert_eq!((r.lambda1, r.m_actual), (0, 0));
        assert!(r.steps.is_empty());
    }

    #[test]
    fn unreachable_counts_fall_back() {
        // 9 edges on 6 vertices: K_4 ∪ K_2 (7) is the best union
        let r = algorithm1(6, 9).unwrap();
        assert_eq!(r.partition.non_singleton_sizes(), [4, 2]);
        assert_eq!(r.m_actual, 7);
        assert_eq!(r.shortfall(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(algorithm1(4, 7), Err(Error::TooManyEdges { .. })));
        assert!(algorithm1(0, 0).is_err());
    }

    #[test]
    fn steps_account_for_edges() {
        let r = algorithm1(20, 50).unwrap();
        assert_eq!(r.steps.len(), 4);
        assert_eq!(
            r.steps[0],
            BuildStep { size: 8, count: 1, edges_remaining_before: 50, vertices_remaining_before: 20 }
        );
        let total: usize = r.steps.iter().map(|s| s.count * choose2(s.size)).sum();
        assert_eq!(total, r.m_actual);
    }

    /// Whether some union of complete graphs on at most `n` vertices has
    /// exactly `e` edges, by a subset-sum table over part sizes.
    fn reachable_table(n: usize) -> Vec<Vec<bool>> {
        let max = choose2(n);
        // t[v][e]: e edges on exactly v vertices (parts of size ≥ 1)
        let mut t = vec![vec![false; max + 1]; n + 1];
        t[0][0] = true;
        for v in 1..=n {
            for x in 1..=v {
                let c = choose2(x);
                for e in c..=max {
                    if t[v - x][e - c] {
                        t[v][e] = true;
                    }
                }
            }
        }
        t
    }

    #[test]
    fn invariants_up_to_40() {
        for n in 1..=40 {
            let table = reachable_table(n);
            for m in 0..=choose2(n) {
                let r = algorithm1(n, m).unwrap();
                let best = (0..=m).rev().find(|&e| table[n][e]).unwrap();
                assert_eq!(r.m_actual, best, "({n},{m})");
                assert!(r.shortfall() <= n.saturating_sub(2), "({n},{m})");
                assert_eq!(r.partition.n(), n);
                assert!(r.steps.windows(2).all(|w| w[0].size > w[1].size), "({n},{m})");
            }
        }
    }

    #[test]
    fn lambda1_is_largest_part() {
        for (n, m) in [(9, 10), (15, 34), (8, 16), (7, 7)] {
            let r = algorithm1(n, m).unwrap();
            assert!((spectral::lambda1_numeric(&r.graph()) - r.lambda1 as f64).abs() < 1e-9);
        }
    }
}
