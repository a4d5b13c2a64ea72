//! Laplacian spectra: a dense symmetric eigensolver and the quantities the
//! rest of the crate reads off it (`λ1`, algebraic connectivity, the
//! complement relation).

mod jacobi;

use std::ops::{Index, IndexMut};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default tolerance for spectral assertions.
pub const TOL: f64 = 1e-9;
/// Tolerance when comparing an eigenvalue against an integer.
pub const INT_TOL: f64 = 1e-6;

/// Dense square `f64` matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Max absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.data.chunks(self.n.max(1)).map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..i {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    fn max_off_diagonal(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                worst = worst.max(self[(i, j)].abs());
            }
        }
        worst
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data.chunks(self.n).map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Eigenvalues sorted non-increasing, repeats kept.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn lambda1(&self) -> f64 {
        self.values[0]
    }

    /// Second smallest value; zero for a single vertex.
    pub fn algebraic_connectivity(&self) -> f64 {
        match self.values.len() {
            0 | 1 => 0.0,
            n => self.values[n - 2],
        }
    }

    /// Checks the facts every Laplacian spectrum of an `n`-vertex graph must
    /// satisfy: smallest value zero, all values non-negative, `λ1 ≤ n`.
    pub fn is_laplacian_like(&self) -> bool {
        let n = self.values.len() as f64;
        let last = *self.values.last().unwrap_or(&0.0);
        last.abs() <= self.tol && self.values.iter().all(|&x| x >= -self.tol) && self.values[0] <= n + self.tol
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

/// Eigenvalues of a symmetric matrix, sorted non-increasing.
///
/// Input asymmetry above `1e-9 · max(1, ‖A‖∞)` is rejected; anything below is
/// averaged away before iterating.
pub fn eig_symmetric(a: &DenseMatrix) -> Result<Spectrum> {
    let (values, _) = eigenpairs(a, false)?;
    Ok(Spectrum { values, tol: TOL })
}

fn eigenpairs(a: &DenseMatrix, vectors: bool) -> Result<(Vec<f64>, Option<DenseMatrix>)> {
    let max_asymmetry = a.max_asymmetry();
    if max_asymmetry > TOL * a.norm_inf().max(1.0) {
        return Err(Error::NotSymmetric { max_asymmetry });
    }
    let sym = DenseMatrix::from_fn(a.n(), |i, j| 0.5 * (a[(i, j)] + a[(j, i)]));
    let (values, vecs) = jacobi::diagonalize(&sym, vectors)?;
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&x, &y| values[y].total_cmp(&values[x]));
    let sorted = order.iter().map(|&k| values[k]).collect();
    let vecs = vecs.map(|v| DenseMatrix::from_fn(v.n(), |i, j| v[(i, order[j])]));
    Ok((sorted, vecs))
}

/// Full Laplacian spectrum of `g`.
pub fn spectrum(g: &Graph) -> Spectrum {
    eig_symmetric(&g.laplacian().to_dense()).expect("Laplacians are symmetric and Jacobi converges")
}

/// Largest Laplacian eigenvalue.
///
/// Unions of complete graphs return the largest clique size exactly;
/// everything else is solved component by component.
pub fn lambda1(g: &Graph) -> f64 {
    if let Some(p) = g.as_union_of_complete() {
        let exact = if p.largest() > 1 { p.largest() as f64 } else { 0.0 };
        #[cfg(test)]
        assert!((exact - lambda1_numeric(g)).abs() <= INT_TOL, "closed form disagrees with solver");
        return exact;
    }
    let value = lambda1_numeric(g);
    debug_assert!(value <= g.n() as f64 + TOL);
    debug_assert!(g.edge_count() == 0 || value >= g.max_degree() as f64 + 1.0 - INT_TOL);
    value
}

pub(crate) fn lambda1_numeric(g: &Graph) -> f64 {
    g.components().iter().filter(|c| c.len() > 1).map(|c| spectrum(&g.induced(c)).lambda1()).fold(0.0, f64::max)
}

/// `λ_{n−1}`, zero iff `g` is disconnected (or `n = 1`).
pub fn algebraic_connectivity(g: &Graph) -> f64 {
    spectrum(g).algebraic_connectivity()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplementCheck {
    pub holds: bool,
    pub max_deviation: f64,
}

/// Solves `g` and its complement independently and measures
/// `λ_i(Gᶜ) − (n − λ_{n−i}(G))` for `i = 1..n−1`, plus both zero eigenvalues.
pub fn complement_relation_check(g: &Graph, tol: f64) -> ComplementCheck {
    let n = g.n();
    let s = spectrum(g).values;
    let sc = spectrum(&g.complement()).values;
    let mut dev = s[n - 1].abs().max(sc[n - 1].abs());
    for i in 1..n {
        dev = dev.max((sc[i - 1] - (n as f64 - s[n - i - 1])).abs());
    }
    ComplementCheck { holds: dev <= tol, max_deviation: dev }
}
