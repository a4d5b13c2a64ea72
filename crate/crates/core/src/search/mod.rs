//! Exhaustive global minimum of `λ1` over all graphs with `n` vertices and
//! `m` edges.
//!
//! Two oracles: [`search_labeled`] walks every labeled edge subset (n ≤ 7),
//! [`search_canonical`] generates one graph per isomorphism class (n ≤ 10),
//! optionally skipping graphs whose maximum degree already forces `λ1` above
//! the constructed upper bound. Both report the same witness: the graph
//! with the least canonical form among the minimizers.

mod canon;
mod canonical;
mod labeled;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;

pub use canonical::{count_canonical, resolve_cap, search_canonical};
pub use labeled::search_labeled;

use crate::error::Result;
use crate::graph::Graph;
use crate::partition_builder::{certify, Basis, CertificateKind, CertifyOptions};
use crate::spectral::INT_TOL;

pub const LABELED_MAX_N: usize = 7;
pub const CANONICAL_MAX_N: usize = 10;
/// Largest `n` for which [`oracle`] is considered affordable.
pub const ORACLE_MAX_N: usize = 9;

/// Canonical form of `g` (up to 11 vertices): equal iff isomorphic.
pub fn canonical_form(g: &Graph) -> u64 {
    canon::canonical_form(g)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Labeled,
    Canonical,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Labeled => "labeled",
            Self::Canonical => "canonical",
        })
    }
}

/// Maximum-degree pruning for [`search_canonical`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeCap {
    /// `U − 1` where `U` is the constructed `λ1`, when the construction
    /// reaches exactly `m` edges; no cap otherwise.
    Auto,
    Off,
    At(usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub m: usize,
    pub min_lambda1: f64,
    /// The minimizer with the least canonical form.
    pub witness: Graph,
    /// One graph per isomorphism class attaining the minimum, by canonical form.
    pub minimizers: Vec<Graph>,
    pub graphs_examined: u64,
    pub pruned: u64,
    pub method: Method,
    pub degree_cap: Option<usize>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Running minimum with every canonical form within a tie tolerance of it.
#[derive(Debug, Clone)]
pub(crate) struct Best {
    value: f64,
    forms: BTreeMap<u64, f64>,
}

const TIE: f64 = 1e-9;

impl Default for Best {
    fn default() -> Self {
        Self { value: f64::INFINITY, forms: BTreeMap::new() }
    }
}

impl Best {
    pub(crate) fn value(&self) -> f64 {
        self.value
    }

    pub(crate) fn offer(&mut self, value: f64, form: impl FnOnce() -> u64) {
        if value > self.value + TIE {
            return;
        }
        let form = form();
        let entry = self.forms.entry(form).or_insert(value);
        *entry = entry.min(value);
        if value < self.value {
            self.value = value;
            let cut = value + TIE;
            self.forms.retain(|_, v| *v <= cut);
        }
    }

    pub(crate) fn merge(&mut self, other: &Self) {
        for (&form, &value) in &other.forms {
            self.offer(value, || form);
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn into_report(
        self,
        n: usize,
        m: usize,
        graphs_examined: u64,
        pruned: u64,
        method: Method,
        degree_cap: Option<usize>,
        elapsed: Duration,
    ) -> SearchReport {
        SearchReport {
            n,
            m,
            min_lambda1: self.value,
            witness: canon::decode(n, *self.forms.keys().next().expect("at least one graph evaluated")),
            minimizers: self.forms.keys().map(|&f| canon::decode(n, f)).collect(),
            graphs_examined,
            pruned,
            method,
            degree_cap,
            elapsed,
        }
    }
}

/// The cheaper adequate oracle: labeled enumeration up to `n = 6`,
/// canonical augmentation with the automatic degree cap above.
pub fn oracle(n: usize, m: usize) -> Result<SearchReport> {
    if n <= 6 {
        search_labeled(n, m)
    } else {
        search_canonical(n, m, DegreeCap::Auto)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossValidation {
    pub n: usize,
    pub m: usize,
    pub m_actual: usize,
    pub built_lambda1: usize,
    pub legm_bases: Vec<Basis>,
    pub oracle_min: f64,
    pub method: Method,
    pub consistent: bool,
    pub discrepancy: Option<String>,
}

/// Construction, certificates and oracle side by side. The oracle must not
/// beat a certified value, nor exceed the constructed one.
pub fn cross_validate(n: usize, m: usize) -> Result<CrossValidation> {
    let cert = certify(n, m, &CertifyOptions::default())?;
    let report = oracle(n, m)?;
    let built = cert.build.lambda1;
    let legm_bases: Vec<Basis> =
        cert.certificates.iter().filter(|c| c.kind == CertificateKind::Legm).map(|c| c.basis).collect();
    let mut problems = Vec::new();
    if cert.build.m_actual == m {
        if report.min_lambda1 > built as f64 + INT_TOL {
            problems.push(format!("oracle min {} exceeds constructed {built}", report.min_lambda1));
        }
        if !legm_bases.is_empty() && (report.min_lambda1 - built as f64).abs() > INT_TOL {
            problems.push(format!("certified {built} ({legm_bases:?}) but oracle min is {}", report.min_lambda1));
        }
    }
    Ok(CrossValidation {
        n,
        m,
        m_actual: cert.build.m_actual,
        built_lambda1: built,
        legm_bases,
        oracle_min: report.min_lambda1,
        method: report.method,
        consistent: problems.is_empty(),
        discrepancy: (!problems.is_empty()).then(|| problems.join("; ")),
    })
}
