use serde::Serialize;

use crate::choose2;
use crate::error::{Error, Result};

/// Sizes of the complete components of a union of complete graphs, sorted
/// non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    sizes: Vec<usize>,
    n: usize,
    m: usize,
}

impl Partition {
    /// Sorts `sizes` non-increasing. Every size must be at least one.
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero-size part in {sizes:?}")));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let n = sizes.iter().sum();
        let m = sizes.iter().map(|&s| choose2(s)).sum();
        Ok(Self { sizes, n, m })
    }

    /// Pads with singletons up to `n` vertices.
    pub fn padded(sizes: Vec<usize>, n: usize) -> Result<Self> {
        let used: usize = sizes.iter().sum();
        if used > n {
            return Err(Error::InvalidPartition(format!("sizes {sizes:?} exceed n = {n}")));
        }
        let mut sizes = sizes;
        sizes.extend(std::iter::repeat_n(1, n - used));
        Self::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Sizes with the `K_1` parts dropped.
    pub fn non_singleton_sizes(&self) -> Vec<usize> {
        self.sizes.iter().copied().filter(|&s| s > 1).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Σ C(n_i, 2)`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    pub fn largest(&self) -> usize {
        self.sizes[0]
    }

    /// Integer partitions of `n` in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur.clone()).expect("positive parts"));
                return;
            }
            for s in (1..=max.min(rem)).rev() {
                cur.push(s);
                rec(rem - s, s, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_and_counts() {
        let p = Partition::new(vec![2, 4, 3]).unwrap();
        assert_eq!(p.sizes(), &[4, 3, 2]);
        assert_eq!((p.n(), p.m()), (9, 10));
    }

    #[test]
    fn rejects_zero_and_empty() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
    }

    #[test]
    fn padding() {
        let p = Partition::padded(vec![12, 12], 25).unwrap();
        assert_eq!(p.sizes().len(), 3);
        assert_eq!(p.non_singleton_sizes(), vec![12, 12]);
        assert!(Partition::padded(vec![5, 5], 9).is_err());
    }

    #[test]
    fn partition_counts() {
        // p(1..=10)
        let expect = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in (1..=10).zip(&expect) {
            assert_eq!(Partition::all_of(n).len(), e);
        }
    }
}
