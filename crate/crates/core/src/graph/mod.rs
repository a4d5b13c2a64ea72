//! Simple undirected graphs stored as a strict upper-triangular bit matrix.

mod io;
mod matrix;
mod partition;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::choose2;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use io::{parse_edge_list, write_edge_list};
pub use matrix::IntMatrix;
pub use partition::Partition;

/// A simple undirected unweighted graph on vertices `0..n`.
///
/// Immutable once built; the `with_*` methods return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    bits: Vec<u64>,
}

/// Bit index of the unordered pair `{i, j}`, `i < j`, in row-major
/// upper-triangular order.
#[inline]
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

#[inline]
fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Self { n, m: 0, bits: vec![0; choose2(n).div_ceil(64)] })
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    /// Builds a graph from vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::LabelOutOfRange { i, j, label: i.max(j), n });
            }
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            g.insert(i, j);
        }
        Ok(g)
    }

    /// Disjoint union of complete graphs, one contiguous label block per
    /// part, largest part first.
    pub fn union_of_complete(partition: &Partition) -> Self {
        let mut g = Self::empty(partition.n()).expect("partitions are non-empty");
        let mut start = 0;
        for &size in partition.sizes() {
            for i in start..start + size {
                for j in i + 1..start + size {
                    g.insert(i, j);
                }
            }
            start += size;
        }
        debug_assert_eq!(g.m, partition.m());
        g
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize) -> bool {
        let (i, j) = ordered(i, j);
        let k = pair_index(self.n, i, j);
        let word = &mut self.bits[k / 64];
        let mask = 1u64 << (k % 64);
        if *word & mask == 0 {
            *word |= mask;
            self.m += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn remove(&mut self, i: usize, j: usize) -> bool {
        let (i, j) = ordered(i, j);
        let k = pair_index(self.n, i, j);
        let word = &mut self.bits[k / 64];
        let mask = 1u64 << (k % 64);
        if *word & mask != 0 {
            *word &= !mask;
            self.m -= 1;
            true
        } else {
            false
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j || i >= self.n || j >= self.n {
            return false;
        }
        let (i, j) = ordered(i, j);
        let k = pair_index(self.n, i, j);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// All unordered pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs().filter(|&(i, j)| self.has_edge(i, j))
    }

    /// Non-adjacent pairs in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs().filter(|&(i, j)| !self.has_edge(i, j))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (i, j) in self.edges() {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn with_edge(&self, i: usize, j: usize) -> Self {
        let mut g = self.clone();
        g.insert(i, j);
        g
    }

    pub fn without_edge(&self, i: usize, j: usize) -> Self {
        let mut g = self.clone();
        g.remove(i, j);
        g
    }

    pub fn complement(&self) -> Self {
        let total = choose2(self.n);
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        if !total.is_multiple_of(64) {
            let last = bits.len() - 1;
            bits[last] &= (1u64 << (total % 64)) - 1;
        }
        Self { n: self.n, m: total - self.m, bits }
    }

    /// `L = D − A` with integer entries.
    pub fn laplacian(&self) -> IntMatrix {
        let mut l = IntMatrix::zeros(self.n);
        for (i, j) in self.edges() {
            l.add(i, j, -1);
            l.add(j, i, -1);
            l.add(i, i, 1);
            l.add(j, j, 1);
        }
        l
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let delta_max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, delta_max, two_m: 2 * self.m, n: self.n }
    }

    /// Connected components, largest first, ties by smallest label. Each
    /// component lists its vertices in increasing order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        // stable sort keeps smallest-label order among equal sizes
        out.sort_by_key(|c| std::cmp::Reverse(c.len()));
        out
    }

    /// Component index of every vertex, using the order of [`Graph::components`].
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n];
        for (c, comp) in self.components().iter().enumerate() {
            for &v in comp {
                label[v] = c;
            }
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The induced subgraph on `vertices`, relabeled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len()).expect("non-empty vertex list");
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.insert(a, b);
                }
            }
        }
        g
    }

    /// If every component is a clique, the component sizes.
    pub fn as_union_of_complete(&self) -> Option<Partition> {
        let comps = self.components();
        let is_clique =
            |c: &Vec<usize>| c.iter().enumerate().all(|(a, &u)| c[a + 1..].iter().all(|&v| self.has_edge(u, v)));
        if comps.iter().all(is_clique) {
            Partition::new(comps.iter().map(Vec::len).collect()).ok()
        } else {
            None
        }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        Self::from_edges(self.n, self.edges().map(|(i, j)| (perm[i], perm[j])))
            .expect("permutation keeps labels in range")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Graph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("edges", &self.edges().map(|(i, j)| [i, j]).collect::<Vec<_>>())?;
        st.end()
    }
}

/// Per-vertex degrees with `Δ` and the exact average degree `2m/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub delta_max: usize,
    pub two_m: usize,
    pub n: usize,
}

impl DegreeProfile {
    pub fn d_avg(&self) -> Rational {
        Rational::new(self.two_m as i64, self.n as i64)
    }

    /// `⌈2m/n⌉` in integer arithmetic.
    pub fn ceil_d_avg(&self) -> usize {
        self.two_m.div_ceil(self.n)
    }
}

impl Serialize for DegreeProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DegreeProfile", 4)?;
        st.serialize_field("degrees", &self.degrees)?;
        st.serialize_field("delta_max", &self.delta_max)?;
        st.serialize_field("d_avg", &rational::display(&self.d_avg()))?;
        st.serialize_field("ceil_d_avg", &self.ceil_d_avg())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(sizes: &[usize]) -> Partition {
        Partition::new(sizes.to_vec()).unwrap()
    }

    #[test]
    fn path_from_edge_list() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0) && g.has_edge(2, 1) && !g.has_edge(0, 2));
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert_eq!(Graph::from_edges(4, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(Graph::from_edges(4, [(1, 4)]), Err(Error::LabelOutOfRange { label: 4, .. })));
        assert_eq!(Graph::empty(0), Err(Error::NoVertices));
    }

    #[test]
    fn union_of_complete_edge_counts() {
        let g = Graph::union_of_complete(&part(&[6, 3]));
        assert_eq!((g.n(), g.edge_count()), (9, 18));
        let g = Graph::union_of_complete(&part(&[4, 3, 2]));
        assert_eq!((g.n(), g.edge_count()), (9, 10));
        let g = Graph::union_of_complete(&part(&[1, 1, 1]));
        assert_eq!((g.n(), g.edge_count()), (3, 0));
    }

    #[test]
    fn complement_of_two_cliques_is_complete_bipartite() {
        let g = Graph::union_of_complete(&part(&[6, 3])).complement();
        assert_eq!(g.edge_count(), 18);
        // brute force over all 36 pairs: edge iff the endpoints sit in different blocks
        for (i, j) in g.pairs() {
            assert_eq!(g.has_edge(i, j), (i < 6) != (j < 6), "pair ({i},{j})");
        }
    }

    #[test]
    fn complement_of_complete_is_empty() {
        for n in 1..12 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(k.edge_count(), choose2(n));
            assert_eq!(k.complement(), Graph::empty(n).unwrap());
        }
    }

    #[test]
    fn laplacian_small_cases() {
        let l = Graph::from_edges(2, [(0, 1)]).unwrap().laplacian();
        assert_eq!(l.rows(), vec![vec![1, -1], vec![-1, 1]]);
        let l = Graph::complete(3).unwrap().laplacian();
        assert_eq!(l.rows(), vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        // L(K_n) = nI − J
        let n = 7;
        let l = Graph::complete(n).unwrap().laplacian();
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { n as i64 - 1 } else { -1 };
                assert_eq!(l.get(i, j), expect);
            }
        }
    }

    #[test]
    fn degree_profiles() {
        let p = Graph::union_of_complete(&part(&[6, 3])).degree_profile();
        assert_eq!(p.delta_max, 5);
        assert_eq!(p.d_avg(), Rational::from_integer(4));
        let p = Graph::empty(5).unwrap().degree_profile();
        assert_eq!((p.delta_max, p.ceil_d_avg()), (0, 0));
        // K_l ∪ K_{n−l}: d_avg = n − l − 1 − (l − 2l²/n)
        for n in 2..30i64 {
            for l in 1..=n / 2 {
                let g = Graph::union_of_complete(&part(&[(n - l) as usize, l as usize]));
                let closed =
                    Rational::from_integer(n - l - 1) - (Rational::from_integer(l) - Rational::new(2 * l * l, n));
                assert_eq!(g.degree_profile().d_avg(), closed);
            }
        }
    }

    #[test]
    fn components_sorted_by_size() {
        // K_1 on label 0, K_2 on 1-2, K_4 on 3..6 to exercise the ordering
        let g = Graph::from_edges(7, [(1, 2), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]).unwrap();
        let sizes: Vec<_> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![4, 2, 1]);
        assert_eq!(g.as_union_of_complete().unwrap().sizes(), &[4, 2, 1]);
        assert_eq!(Graph::complete(5).unwrap().components().len(), 1);
        assert_eq!(Graph::empty(5).unwrap().components().len(), 5);
    }

    #[test]
    fn path_is_not_union_of_complete() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(g.as_union_of_complete().is_none());
    }
}
