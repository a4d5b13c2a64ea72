//! Circulant graphs, their spectra from the cosine transform of the
//! generating row, the divisibility construction of circulant unions of
//! equal cliques, and an exhaustive minimizer of the spectral peak.
//!
//! Frequencies are 0-based: `X_0` is the DC term.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition_builder::{Basis, Certificate, CertificateDetails, CertificateKind};
use crate::rational::Rational;

/// A symmetric connection set `S ⊆ {1, …, n−1}` with `j ∈ S ⇔ n − j ∈ S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CirculantSet {
    n: usize,
    offsets: Vec<usize>,
}

impl CirculantSet {
    pub fn new(n: usize, offsets: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut offsets: Vec<usize> = offsets.into_iter().collect();
        offsets.sort_unstable();
        offsets.dedup();
        if let Some(&bad) = offsets.iter().find(|&&j| j == 0 || j >= n) {
            return Err(Error::InvalidCirculant(format!("offset {bad} outside 1..{n}")));
        }
        if let Some(&j) = offsets.iter().find(|&&j| offsets.binary_search(&(n - j)).is_err()) {
            return Err(Error::InvalidCirculant(format!("offset {j} present but {} missing", n - j)));
        }
        Ok(Self { n, offsets })
    }

    /// Parses a 0/1 generating row; position 0 must be `0`.
    pub fn from_row(row: &str) -> Result<Self> {
        let row = row.trim();
        let bits: Vec<bool> = row
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidCirculant(format!("row character {other:?} is not 0 or 1"))),
            })
            .collect::<Result<_>>()?;
        if bits.first() == Some(&true) {
            return Err(Error::InvalidCirculant("row position 0 must be 0 (no self-loop)".into()));
        }
        Self::new(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn degree(&self) -> usize {
        self.offsets.len()
    }

    pub fn row(&self) -> String {
        let mut row = vec!['0'; self.n];
        for &j in &self.offsets {
            row[j] = '1';
        }
        row.into_iter().collect()
    }
}

pub fn circulant_graph(s: &CirculantSet) -> Graph {
    let n = s.n;
    let pairs = (0..n).flat_map(|i| s.offsets.iter().map(move |&j| (i, (i + j) % n)));
    Graph::from_edges(n, pairs).expect("offsets are in range and nonzero")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DftSpectrum {
    /// `X_k = −(d − Σ_{j∈S} cos(2πkj/n))`, real because `S` is symmetric.
    pub x: Vec<f64>,
    /// `max_{k≥1} |X_k|`.
    pub peak: f64,
}

impl DftSpectrum {
    /// The Laplacian eigenvalues `−X_k`, in non-increasing order.
    pub fn laplacian_eigenvalues(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.x.iter().map(|x| -x).collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    pub fn lambda1(&self) -> f64 {
        self.peak
    }
}

pub fn dft_spectrum(s: &CirculantSet) -> DftSpectrum {
    let n = s.n;
    let d = s.degree() as f64;
    let x: Vec<f64> = (0..n)
        .map(|k| {
            let sum: f64 = s.offsets.iter().map(|&j| (2.0 * PI * ((k * j) % n) as f64 / n as f64).cos()).sum();
            -(d - sum)
        })
        .collect();
    let peak = x.iter().skip(1).fold(0.0f64, |acc, v| acc.max(v.abs()));
    DftSpectrum { x, peak }
}

/// Output of the divisibility construction: `ℓ` copies of `K_i` as a circulant.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem5 {
    pub set: CirculantSet,
    pub i: usize,
    pub ell: usize,
    pub certificate: Certificate,
}

/// For `n | 2m` and `(2m/n + 1) | n`, the circulant with
/// `S = {ℓ, 2ℓ, …, n − ℓ}`, `i = 2m/n + 1`, `ℓ = n/i`.
pub fn theorem5_construct(n: usize, m: usize) -> Result<Theorem5> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    if !(2 * m).is_multiple_of(n) {
        return Err(Error::Precondition(format!("n = {n} does not divide 2m = {}", 2 * m)));
    }
    let i = 2 * m / n + 1;
    if !n.is_multiple_of(i) {
        return Err(Error::Precondition(format!("2m/n + 1 = {i} does not divide n = {n}")));
    }
    let ell = n / i;
    let set = CirculantSet::new(n, (1..i).map(|k| k * ell))?;
    let certificate = Certificate {
        kind: CertificateKind::Legm,
        n,
        m,
        lambda1: i,
        basis: Basis::Thm3,
        details: CertificateDetails {
            lower_bound: Some(i),
            condition_value: Some(Rational::from_integer(0)),
            oracle: None,
            note: Some("complement is an algebraic connectivity maximizer".into()),
        },
    };
    Ok(Theorem5 { set, i, ell, certificate })
}

/// Largest `n` accepted by [`solve_problem2`].
pub const PROBLEM2_MAX_N: usize = 40;

#[derive(Debug, Clone, Serialize)]
pub struct Problem2Solution {
    pub set: CirculantSet,
    pub spectrum: DftSpectrum,
    /// Number of symmetric sets of size `d` examined.
    pub candidates: usize,
}

/// Exhaustive minimization of the peak over every symmetric `S` with `|S| = d`.
/// Ties within `1e−9` go to the lexicographically least offset list.
pub fn solve_problem2(n: usize, d: usize) -> Result<Problem2Solution> {
    if n > PROBLEM2_MAX_N {
        return Err(Error::SizeCap { what: "solve_problem2", n, cap: PROBLEM2_MAX_N });
    }
    if d == 0 || d >= n {
        return Err(Error::NoSymmetricSet { n, d, reason: format!("need 1 <= d <= n - 1 = {}", n.saturating_sub(1)) });
    }
    let middle = n.is_multiple_of(2).then_some(n / 2);
    if d % 2 == 1 && middle.is_none() {
        return Err(Error::NoSymmetricSet {
            n,
            d,
            reason: "offsets pair up as {j, n - j}; an odd size needs the self-paired offset n/2, which odd n lacks"
                .into(),
        });
    }
    let pairs = (n - 1) / 2;
    let want_pairs = d / 2;
    let with_middle = d % 2 == 1;
    let masks: Vec<u64> = (0u64..1 << pairs).filter(|m| m.count_ones() as usize == want_pairs).collect();
    let scored: Vec<(f64, CirculantSet, DftSpectrum)> = masks
        .par_iter()
        .map(|&mask| {
            let mut offsets: Vec<usize> =
                (0..pairs).filter(|b| mask >> b & 1 == 1).flat_map(|b| [b + 1, n - b - 1]).collect();
            if with_middle {
                offsets.extend(middle);
            }
            let set = CirculantSet::new(n, offsets).expect("symmetric by construction");
            let spec = dft_spectrum(&set);
            (spec.peak, set, spec)
        })
        .collect();
    let candidates = scored.len();
    let best = scored.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let (_, set, spectrum) = scored
        .into_iter()
        .filter(|s| s.0 <= best + 1e-9)
        .min_by(|a, b| a.1.offsets.cmp(&b.1.offsets))
        .expect("at least one candidate");
    Ok(Problem2Solution { set, spectrum, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(n: usize, s: &[usize]) -> CirculantSet {
        CirculantSet::new(n, s.iter().copied()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CirculantSet::new(9, [2, 4]).is_err());
        assert!(CirculantSet::new(9, [0]).is_err());
        assert!(CirculantSet::new(9, [9]).is_err());
        assert!(CirculantSet::from_row("101").is_err());
        assert!(CirculantSet::from_row("0120").is_err());
        assert_eq!(CirculantSet::from_row("001011010").unwrap(), set(9, &[2, 4, 5, 7]));
        assert_eq!(set(9, &[2, 4, 5, 7]).row(), "001011010");
    }

    #[test]
    fn graphs() {
        let g = circulant_graph(&set(9, &[2, 4, 5, 7]));
        assert_eq!(g.edge_count(), 18);
        assert!(g.degrees().iter().all(|&d| d == 4));
        let c7 = circulant_graph(&set(7, &[1, 6]));
        assert_eq!(c7.edge_count(), 7);
        assert!(c7.is_connected());
        assert_eq!(circulant_graph(&CirculantSet::new(6, 1..6).unwrap()), Graph::complete(6).unwrap());
    }

    #[test]
    fn example_spectra() {
        assert!((dft_spectrum(&set(9, &[2, 4, 5, 7])).peak - 6.0).abs() < 1e-9);
        assert!((dft_spectrum(&set(9, &[3, 4, 5, 6])).peak - 6.88).abs() < 0.01);
        let c7 = dft_spectrum(&set(7, &[1, 6])).peak;
        assert!((c7 - (2.0 - 2.0 * (6.0 * PI / 7.0).cos())).abs() < 1e-12);
        assert!((c7 - 3.802).abs() < 1e-3);
    }

    #[test]
    fn dft_structure() {
        let s = dft_spectrum(&set(12, &[1, 5, 6, 7, 11]));
        assert!(s.x[0].abs() < 1e-12);
        for k in 1..12 {
            assert!((s.x[k] - s.x[12 - k]).abs() < 1e-12);
        }
    }

    #[test]
    fn dft_matches_eigensolver_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(2..=40);
            let offsets: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.4)).flat_map(|j| [j, n - j]).collect();
            let s = CirculantSet::new(n, offsets).unwrap();
            let dft = dft_spectrum(&s).laplacian_eigenvalues();
            let eig = spectral::spectrum(&circulant_graph(&s)).values;
            for (a, b) in dft.iter().zip(&eig) {
                assert!((a - b).abs() < 1e-6, "{s:?}");
            }
        }
    }

    #[test]
    fn theorem5_instances() {
        let t = theorem5_construct(9, 9).unwrap();
        assert_eq!((t.i, t.ell, t.set.offsets()), (3, 3, &[3, 6][..]));
        let g = circulant_graph(&t.set);
        assert_eq!(g.as_union_of_complete().unwrap().sizes(), [3, 3, 3]);
        let t = theorem5_construct(8, 12).unwrap();
        assert_eq!((t.i, t.ell, t.set.offsets()), (4, 2, &[2, 4, 6][..]));
        assert!((spectral::lambda1(&circulant_graph(&t.set)) - 4.0).abs() < 1e-9);
        let err = theorem5_construct(9, 18).unwrap_err().to_string();
        assert!(err.contains("5 does not divide"), "{err}");
        assert!(theorem5_construct(9, 10).unwrap_err().to_string().contains("does not divide 2m"));
    }

    #[test]
    fn problem2_instances() {
        let s = solve_problem2(9, 4).unwrap();
        assert!((s.spectrum.peak - 6.0).abs() < 1e-9);
        assert!((dft_spectrum(&set(9, &[2, 4, 5, 7])).peak - s.spectrum.peak).abs() < 1e-9);
        assert_eq!(s.candidates, 6);
        let s = solve_problem2(7, 2).unwrap();
        assert_eq!(s.set.offsets(), [1, 6]);
        assert!((s.spectrum.peak - 3.802).abs() < 1e-3);
        for n in 3..12 {
            let s = solve_problem2(n, n - 1).unwrap();
            assert!((s.spectrum.peak - n as f64).abs() < 1e-9);
        }
        assert!(matches!(solve_problem2(9, 3), Err(Error::NoSymmetricSet { .. })));
        assert_eq!(solve_problem2(10, 3).unwrap().set.degree(), 3);
    }

    #[test]
    fn problem2_candidate_counts() {
        // choices over the ⌊(n−1)/2⌋ symmetric pairs plus n/2 for even n
        for n in 2..=16usize {
            let total: usize = (1..n).filter_map(|d| solve_problem2(n, d).ok()).map(|s| s.candidates).sum();
            let pairs = (n - 1) / 2;
            let all = if n % 2 == 0 { 1 << (pairs + 1) } else { 1 << pairs };
            assert_eq!(total, all - 1, "n = {n}");
        }
    }
}
