//! Every `m`-subset of the `C(n,2)` pairs, in colexicographic mask order.

use std::time::Instant;

use super::canon;
use super::{Best, Method, SearchReport, LABELED_MAX_N};
use crate::choose2;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral;

/// Next integer with the same popcount (Gosper).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

pub fn search_labeled(n: usize, m: usize) -> Result<SearchReport> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > LABELED_MAX_N {
        return Err(Error::SizeCap { what: "search_labeled (use search_canonical)", n, cap: LABELED_MAX_N });
    }
    let total = choose2(n);
    if m > total {
        return Err(Error::TooManyEdges { n, m, max: total });
    }
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = Graph::empty(n)?.pairs().collect();
    let mut best = Best::default();
    let (mut examined, mut pruned) = (0u64, 0u64);
    let end = 1u64 << total;
    let mut mask = if m == 0 { 0 } else { (1u64 << m) - 1 };
    loop {
        let mut deg = [0usize; LABELED_MAX_N];
        let mut bits = mask;
        while bits != 0 {
            let (i, j) = pairs[bits.trailing_zeros() as usize];
            deg[i] += 1;
            deg[j] += 1;
            bits &= bits - 1;
        }
        let delta = deg.iter().copied().max().unwrap_or(0);
        if m > 0 && (delta + 1) as f64 > best.value() + spectral::INT_TOL {
            pruned += 1;
        } else {
            let g = Graph::from_edges(n, (0..total).filter(|k| mask >> k & 1 == 1).map(|k| pairs[k]))?;
            let l1 = spectral::lambda1(&g);
            examined += 1;
            best.offer(l1, || canon::canonical_form(&g));
        }
        if m == 0 {
            break;
        }
        mask = next_combination(mask);
        if mask >= end {
            break;
        }
    }
    Ok(best.into_report(n, m, examined, pruned, Method::Labeled, None, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_enumerates_binomial() {
        let mut x = 0b111u64;
        let mut count = 0;
        while x < 1 << 7 {
            assert_eq!(x.count_ones(), 3);
            count += 1;
            x = next_combination(x);
        }
        assert_eq!(count, 35);
    }

    #[test]
    fn small_instances() {
        let r = search_labeled(4, 6).unwrap();
        assert!((r.min_lambda1 - 4.0).abs() < 1e-9);
        assert_eq!(r.graphs_examined + r.pruned, 1);
        let r = search_labeled(5, 0).unwrap();
        assert_eq!(r.min_lambda1, 0.0);
        assert_eq!(r.witness.edge_count(), 0);
        let r = search_labeled(2, 1).unwrap();
        assert!((r.min_lambda1 - 2.0).abs() < 1e-9);
    }

    #[test]
    fn seven_cycle_beats_union() {
        let r = search_labeled(7, 7).unwrap();
        assert!((r.min_lambda1 - 3.802).abs() < 1e-3);
        let w = &r.witness;
        assert!(w.is_connected() && w.degrees().iter().all(|&d| d == 2), "witness is C_7");
        assert_eq!(r.graphs_examined + r.pruned, 116_280);
    }

    #[test]
    fn rejects_large_n() {
        assert!(matches!(search_labeled(8, 3), Err(Error::SizeCap { .. })));
        assert!(matches!(search_labeled(4, 7), Err(Error::TooManyEdges { .. })));
    }
}
