//! Graphs that minimize the largest Laplacian eigenvalue for a given vertex
//! and edge count, and through the complement relation
//! `λ_i(Gᶜ) = n − λ_{n−i}(G)`, graphs that maximize algebraic connectivity.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: simple undirected graphs on a bit matrix, unions of complete
//!   graphs, complements, Laplacians, degree statistics, edge-list I/O.
//! * [`spectral`]: a cyclic Jacobi eigensolver and the Laplacian quantities
//!   built on it.
//! * [`neighborhood`]: one-edge moves, connection matrices and the local
//!   minimality (LELM) verifier.
//! * [`partition_builder`]: the greedy union-of-complete-graphs construction,
//!   the two- and multi-component global sufficient conditions, lower bounds
//!   and certificates.
//! * [`circulant`]: circulant graphs, their cosine-DFT spectra and the
//!   exhaustive circulant peak minimizer.
//! * [`search`]: exhaustive global-minimum oracles (labeled enumeration and
//!   isomorph-free canonical augmentation).

pub mod circulant;
pub mod error;
pub mod graph;
pub mod neighborhood;
pub mod partition_builder;
pub mod rational;
pub mod search;
pub mod spectral;

pub use circulant::{CirculantSet, DftSpectrum};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, IntMatrix, Partition};
pub use neighborhood::{CaseLabel, LelmReport, Move, MoveClass, MoveKind};
pub use partition_builder::{Basis, BuildResult, Certificate, CertificateKind};
pub use rational::Rational;
pub use search::SearchReport;
pub use spectral::{DenseMatrix, Spectrum};

/// `C(x, 2)`.
#[inline]
pub fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}
