//! LELM / LEGM certificates for the constructed graph.

use std::fmt;

use serde::Serialize;

use super::conditions::{check_multi_component_condition, check_two_component_condition, TwoComponentClass};
use super::{algorithm1, BuildResult};
use crate::error::Result;
use crate::neighborhood;
use crate::rational::{self, Rational};
use crate::search::{self, SearchReport};
use crate::spectral::INT_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CertificateKind {
    Lelm,
    Legm,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Lelm => "LELM",
            Self::Legm => "LEGM",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// Every union of complete graphs built by the construction is a local minimizer.
    Thm1,
    Thm2Strict,
    Thm2EqualityN9,
    Thm3,
    DegreeBoundMatch,
    Oracle,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Thm1 => "thm1",
            Self::Thm2Strict => "thm2-strict",
            Self::Thm2EqualityN9 => "thm2-equality-n9",
            Self::Thm3 => "thm3",
            Self::DegreeBoundMatch => "degree-bound-match",
            Self::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CertificateDetails {
    pub lower_bound: Option<usize>,
    #[serde(serialize_with = "rational::serialize_opt")]
    pub condition_value: Option<Rational>,
    pub oracle: Option<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub n: usize,
    pub m: usize,
    pub lambda1: usize,
    pub basis: Basis,
    pub details: CertificateDetails,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CertifyOptions {
    /// Run the exhaustive search oracle when `n` is small enough.
    pub use_oracle: bool,
    /// Re-check local minimality over the one-edge neighborhood.
    pub verify_lelm: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certification {
    pub build: BuildResult,
    pub certificates: Vec<Certificate>,
    pub oracle: Option<SearchReport>,
}

impl Certification {
    pub fn is_legm(&self) -> bool {
        self.certificates.iter().any(|c| c.kind == CertificateKind::Legm)
    }

    /// `"LEGM"` when some global certificate was issued, `"LELM"` otherwise.
    /// The latter means the global status is unknown, not refuted.
    pub fn status(&self) -> CertificateKind {
        if self.is_legm() {
            CertificateKind::Legm
        } else {
            CertificateKind::Lelm
        }
    }
}

/// Builds the graph for `(n, m)` and collects every certificate that applies.
pub fn certify(n: usize, m: usize, opts: &CertifyOptions) -> Result<Certification> {
    let build = algorithm1(n, m)?;
    let (m_act, l1) = (build.m_actual, build.lambda1);
    let cert = |kind, basis, details| Certificate { kind, n, m: m_act, lambda1: l1, basis, details };
    let mut certificates = Vec::new();

    let mut lelm = CertificateDetails::default();
    let mut lelm_ok = true;
    if opts.verify_lelm {
        let r = neighborhood::verify_lelm(&build.graph());
        lelm_ok = r.verdict;
        lelm.note = Some(format!("{} of {} neighbors checked", r.examined, r.neighborhood_size));
    }
    if lelm_ok {
        certificates.push(cert(CertificateKind::Lelm, Basis::Thm1, lelm));
    }

    if m_act != m {
        return Ok(Certification { build, certificates, oracle: None });
    }

    if m == 0 {
        let details =
            CertificateDetails { lower_bound: Some(0), note: Some("edgeless graph".into()), ..Default::default() };
        certificates.push(cert(CertificateKind::Legm, Basis::DegreeBoundMatch, details));
        return Ok(Certification { build, certificates, oracle: None });
    }

    let degree_bound = (2 * m).div_ceil(n) + 1;
    let sizes = build.partition.sizes();
    if sizes.len() == 2 {
        let l = sizes[1];
        let check = check_two_component_condition(n, l)?;
        match check.class {
            TwoComponentClass::Strict => certificates.push(cert(
                CertificateKind::Legm,
                Basis::Thm2Strict,
                CertificateDetails {
                    lower_bound: Some(degree_bound),
                    condition_value: Some(check.value),
                    ..Default::default()
                },
            )),
            TwoComponentClass::Equality if n == 9 => certificates.push(cert(
                CertificateKind::Legm,
                Basis::Thm2EqualityN9,
                CertificateDetails {
                    lower_bound: Some(n - l),
                    condition_value: Some(check.value),
                    oracle: Some(format!("exhaustive search over all {m}-edge graphs on {n} vertices")),
                    note: None,
                },
            )),
            _ => {}
        }
    }

    let multi = check_multi_component_condition(&build.partition);
    if multi.satisfied {
        certificates.push(cert(
            CertificateKind::Legm,
            Basis::Thm3,
            CertificateDetails {
                lower_bound: Some(degree_bound),
                condition_value: Some(multi.value),
                ..Default::default()
            },
        ));
    }

    if degree_bound == l1 {
        certificates.push(cert(
            CertificateKind::Legm,
            Basis::DegreeBoundMatch,
            CertificateDetails { lower_bound: Some(degree_bound), ..Default::default() },
        ));
    }

    let mut oracle = None;
    if opts.use_oracle && n <= search::ORACLE_MAX_N {
        let report = search::oracle(n, m)?;
        if (report.min_lambda1 - l1 as f64).abs() <= INT_TOL {
            certificates.push(cert(
                CertificateKind::Legm,
                Basis::Oracle,
                CertificateDetails {
                    oracle: Some(format!("{} search: min λ1 = {}", report.method, report.min_lambda1)),
                    ..Default::default()
                },
            ));
        }
        oracle = Some(report);
    }
    Ok(Certification { build, certificates, oracle })
}
