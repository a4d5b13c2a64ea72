//! One-edge moves around a graph and the largest-eigenvalue local
//! minimality (LELM) check over them.
//!
//! The neighborhood of `G` is every graph reachable by one edge addition,
//! one edge removal, or one edge reconnect (remove an edge, add a non-edge).
//! Reconnects alone number `m · (C(n,2) − m)`, so moves are streamed and
//! never collected.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::choose2;
use crate::error::{Error, Result};
use crate::graph::{Graph, IntMatrix};
use crate::spectral::{self, DenseMatrix, INT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Add,
    Remove,
    Reconnect,
}

pub const ALL_KINDS: [MoveKind; 3] = [MoveKind::Add, MoveKind::Remove, MoveKind::Reconnect];

/// A single edge move. Pairs are stored as `(min, max)`.
///
/// The derived order (kind, then removed pair, then added pair) is the
/// order [`enumerate_moves`] streams in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Move {
    pub kind: MoveKind,
    pub removed: Option<(usize, usize)>,
    pub added: Option<(usize, usize)>,
}

fn norm((i, j): (usize, usize)) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl Move {
    pub fn add(i: usize, j: usize) -> Self {
        Self { kind: MoveKind::Add, removed: None, added: Some(norm((i, j))) }
    }

    pub fn remove(i: usize, j: usize) -> Self {
        Self { kind: MoveKind::Remove, removed: Some(norm((i, j))), added: None }
    }

    pub fn reconnect(removed: (usize, usize), added: (usize, usize)) -> Self {
        Self { kind: MoveKind::Reconnect, removed: Some(norm(removed)), added: Some(norm(added)) }
    }

    /// Checks the move against `g`, naming the first violated precondition.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let illegal = |s: String| Err(Error::IllegalMove(s));
        let in_range = |(i, j): (usize, usize)| i != j && j < g.n();
        match (self.kind, self.removed, self.added) {
            (MoveKind::Add, None, Some(a)) if in_range(a) => {
                if g.has_edge(a.0, a.1) {
                    return illegal(format!("add: {a:?} is already an edge"));
                }
            }
            (MoveKind::Remove, Some(r), None) if in_range(r) => {
                if !g.has_edge(r.0, r.1) {
                    return illegal(format!("remove: {r:?} is not an edge"));
                }
            }
            (MoveKind::Reconnect, Some(r), Some(a)) if in_range(r) && in_range(a) => {
                if r == a {
                    return illegal(format!("reconnect: removed and added pair are both {r:?}"));
                }
                if !g.has_edge(r.0, r.1) {
                    return illegal(format!("reconnect: removed pair {r:?} is not an edge"));
                }
                if g.has_edge(a.0, a.1) {
                    return illegal(format!("reconnect: added pair {a:?} is already an edge"));
                }
            }
            _ => return illegal(format!("malformed move {self:?} for n = {}", g.n())),
        }
        Ok(())
    }

    /// Number of endpoints the removed and added pairs share (reconnects only).
    fn shared_endpoints(&self) -> Option<usize> {
        let (r, a) = (self.removed?, self.added?);
        Some([a.0, a.1].iter().filter(|&&v| v == r.0 || v == r.1).count())
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.removed, self.added) {
            (None, Some(a)) => write!(f, "add {}-{}", a.0, a.1),
            (Some(r), None) => write!(f, "remove {}-{}", r.0, r.1),
            (Some(r), Some(a)) => write!(f, "reconnect {}-{} -> {}-{}", r.0, r.1, a.0, a.1),
            (None, None) => write!(f, "noop"),
        }
    }
}

/// Closed-form count of the moves of the given kinds.
pub fn neighborhood_size(g: &Graph, kinds: &[MoveKind]) -> usize {
    let m = g.edge_count();
    let non = choose2(g.n()) - m;
    kinds
        .iter()
        .map(|k| match k {
            MoveKind::Add => non,
            MoveKind::Remove => m,
            MoveKind::Reconnect => m * non,
        })
        .sum()
}

/// Every legal move of the requested kinds, each exactly once, in [`Move`] order.
pub fn enumerate_moves<'a>(g: &'a Graph, kinds: &[MoveKind]) -> impl Iterator<Item = Move> + 'a {
    let want = |k| kinds.contains(&k);
    let adds = want(MoveKind::Add).then(|| g.non_edges().map(|(i, j)| Move::add(i, j)));
    let removes = want(MoveKind::Remove).then(|| g.edges().map(|(i, j)| Move::remove(i, j)));
    let reconnects = want(MoveKind::Reconnect)
        .then(|| g.edges().flat_map(move |r| g.non_edges().map(move |a| Move::reconnect(r, a))));
    adds.into_iter().flatten().chain(removes.into_iter().flatten()).chain(reconnects.into_iter().flatten())
}

pub fn apply_move(g: &Graph, mv: &Move) -> Result<Graph> {
    mv.validate(g)?;
    let mut h = g.clone();
    if let Some((i, j)) = mv.removed {
        h.remove(i, j);
    }
    if let Some((i, j)) = mv.added {
        h.insert(i, j);
    }
    Ok(h)
}

/// Which connection matrix a move induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveClass {
    /// One edge added: rank 1, top eigenvalue 2.
    Add,
    /// Reconnect keeping one endpoint: rank 2, eigenvalues `±√3`.
    ReconnectSame,
    /// Reconnect with disjoint endpoints: rank 2, eigenvalues `±2`.
    ReconnectIncr,
    Other,
}

impl MoveClass {
    pub fn of(mv: &Move) -> Self {
        match mv.kind {
            MoveKind::Add => Self::Add,
            MoveKind::Remove => Self::Other,
            MoveKind::Reconnect => match mv.shared_endpoints() {
                Some(1) => Self::ReconnectSame,
                Some(0) => Self::ReconnectIncr,
                _ => Self::Other,
            },
        }
    }

    /// `(λ1, rank)` of the connection matrix for this class.
    pub fn expected(self) -> Option<(f64, usize)> {
        match self {
            Self::Add => Some((2.0, 1)),
            Self::ReconnectSame => Some((3f64.sqrt(), 2)),
            Self::ReconnectIncr => Some((2.0, 2)),
            Self::Other => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::Add => "C_add",
            Self::ReconnectSame => "C_re_same",
            Self::ReconnectIncr => "C_re_incr",
            Self::Other => "other",
        }
    }
}

impl Serialize for MoveClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// `L(after) − L(before)` for a move.
#[derive(Debug, Clone)]
pub struct ConnectionMatrix {
    pub matrix: IntMatrix,
    pub class: MoveClass,
}

impl ConnectionMatrix {
    pub fn eigenvalues(&self) -> Vec<f64> {
        spectral::eig_symmetric(&self.matrix.to_dense()).expect("integer symmetric").values
    }

    pub fn lambda1(&self) -> f64 {
        self.eigenvalues()[0]
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// True when `λ1` and the rank match the class's closed form within `tol`.
    pub fn matches_class(&self, tol: f64) -> bool {
        self.class.expected().is_some_and(|(l1, r)| (self.lambda1() - l1).abs() <= tol && self.rank() == r)
    }
}

pub fn connection_matrix(g: &Graph, mv: &Move) -> Result<ConnectionMatrix> {
    let h = apply_move(g, mv)?;
    Ok(ConnectionMatrix { matrix: h.laplacian().sub(&g.laplacian()), class: MoveClass::of(mv) })
}

/// Position of a move in the case analysis for unions of complete graphs:
/// `1` when both touched components are at least two smaller than the
/// largest, `2` when the larger touched one is exactly one smaller, `3` when
/// a largest component is touched; `a` for additions, `r_s`/`r_i` for
/// reconnects that keep / do not keep an endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    Case1Add,
    Case1ReconnectSame,
    Case1ReconnectIncr,
    Case2Add,
    Case2ReconnectSame,
    Case2ReconnectIncr,
    Case3Add,
    Case3Reconnect,
    WithinComponent,
    Other,
}

impl CaseLabel {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Case1Add => "1a",
            Self::Case1ReconnectSame => "1r_s",
            Self::Case1ReconnectIncr => "1r_i",
            Self::Case2Add => "2a",
            Self::Case2ReconnectSame => "2r_s",
            Self::Case2ReconnectIncr => "2r_i",
            Self::Case3Add => "3a",
            Self::Case3Reconnect => "3r",
            Self::WithinComponent => "within-component",
            Self::Other => "other",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Component structure of a union of complete graphs, computed once per scan.
struct CaseContext {
    label: Vec<usize>,
    size: Vec<usize>,
    largest: usize,
}

impl CaseContext {
    fn new(g: &Graph) -> Option<Self> {
        g.as_union_of_complete()?;
        let comps = g.components();
        Some(Self { label: g.component_labels(), size: comps.iter().map(Vec::len).collect(), largest: comps[0].len() })
    }

    fn classify(&self, mv: &Move) -> CaseLabel {
        let Some((u, v)) = mv.added else {
            return match mv.removed {
                Some((u, v)) if self.label[u] == self.label[v] => CaseLabel::WithinComponent,
                _ => CaseLabel::Other,
            };
        };
        let (cu, cv) = (self.label[u], self.label[v]);
        if cu == cv {
            return CaseLabel::WithinComponent;
        }
        let bigger = self.size[cu].max(self.size[cv]);
        let case = if bigger == self.largest {
            3
        } else if bigger + 1 == self.largest {
            2
        } else {
            1
        };
        match (case, MoveClass::of(mv)) {
            (1, MoveClass::Add) => CaseLabel::Case1Add,
            (1, MoveClass::ReconnectSame) => CaseLabel::Case1ReconnectSame,
            (1, MoveClass::ReconnectIncr) => CaseLabel::Case1ReconnectIncr,
            (2, MoveClass::Add) => CaseLabel::Case2Add,
            (2, MoveClass::ReconnectSame) => CaseLabel::Case2ReconnectSame,
            (2, MoveClass::ReconnectIncr) => CaseLabel::Case2ReconnectIncr,
            (3, MoveClass::Add) => CaseLabel::Case3Add,
            (3, MoveClass::ReconnectSame | MoveClass::ReconnectIncr) => CaseLabel::Case3Reconnect,
            _ => CaseLabel::Other,
        }
    }
}

/// Labels `mv` per the case analysis. Graphs that are not unions of
/// complete graphs, and illegal moves, are `Other`.
pub fn case_classify(g: &Graph, mv: &Move) -> CaseLabel {
    if mv.validate(g).is_err() {
        return CaseLabel::Other;
    }
    CaseContext::new(g).map_or(CaseLabel::Other, |ctx| ctx.classify(mv))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CaseStat {
    pub count: usize,
    pub min_lambda1: f64,
    pub max_lambda1: f64,
}

impl CaseStat {
    fn push(&mut self, l1: f64) {
        self.count += 1;
        self.min_lambda1 = self.min_lambda1.min(l1);
        self.max_lambda1 = self.max_lambda1.max(l1);
    }

    fn merge(&mut self, other: &Self) {
        self.count += other.count;
        self.min_lambda1 = self.min_lambda1.min(other.min_lambda1);
        self.max_lambda1 = self.max_lambda1.max(other.max_lambda1);
    }
}

impl Default for CaseStat {
    fn default() -> Self {
        Self { count: 0, min_lambda1: f64::INFINITY, max_lambda1: f64::NEG_INFINITY }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct LelmOptions {
    /// A neighbor is strictly better only if its `λ1` is below `base − tol`.
    pub tol: f64,
    /// Scan the whole neighborhood (in parallel) and collect per-case stats
    /// instead of stopping at the first violation.
    pub full_scan: bool,
}

impl Default for LelmOptions {
    fn default() -> Self {
        Self { tol: INT_TOL, full_scan: false }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LelmReport {
    pub base_lambda1: f64,
    /// Smallest neighbor `λ1` seen; `None` for an empty neighborhood.
    pub worst_neighbor_lambda1: Option<f64>,
    pub violating_move: Option<Move>,
    pub neighborhood_size: usize,
    pub examined: usize,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_stats: Option<BTreeMap<CaseLabel, CaseStat>>,
}

pub fn verify_lelm(g: &Graph) -> LelmReport {
    verify_lelm_with(g, &LelmOptions::default())
}

/// Evaluates `λ1` over the add/remove/reconnect neighborhood of `g`.
///
/// The verdict is true iff no neighbor has `λ1 < base − tol`. The reported
/// violating move is the least one in [`Move`] order in both modes.
pub fn verify_lelm_with(g: &Graph, opts: &LelmOptions) -> LelmReport {
    let base = spectral::lambda1(g);
    let size = neighborhood_size(g, &ALL_KINDS);
    let threshold = base - opts.tol;
    let eval = |mv: &Move| spectral::lambda1(&apply_move(g, mv).expect("enumerated moves are legal"));

    if !opts.full_scan {
        let mut worst: Option<f64> = None;
        let mut examined = 0;
        for mv in enumerate_moves(g, &ALL_KINDS) {
            let l1 = eval(&mv);
            examined += 1;
            worst = Some(worst.map_or(l1, |w| w.min(l1)));
            if l1 < threshold {
                return LelmReport {
                    base_lambda1: base,
                    worst_neighbor_lambda1: worst,
                    violating_move: Some(mv),
                    neighborhood_size: size,
                    examined,
                    verdict: false,
                    case_stats: None,
                };
            }
        }
        return LelmReport {
            base_lambda1: base,
            worst_neighbor_lambda1: worst,
            violating_move: None,
            neighborhood_size: size,
            examined,
            verdict: true,
            case_stats: None,
        };
    }

    let ctx = CaseContext::new(g);
    // one task for the additions, one for the removals, one per removed edge
    // for the reconnects
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let tasks: Vec<Option<(usize, usize)>> = std::iter::once(None).chain(edges.iter().copied().map(Some)).collect();
    let partials: Vec<Partial> = tasks
        .par_iter()
        .map(|task| {
            let moves: Box<dyn Iterator<Item = Move>> = match task {
                None => Box::new(enumerate_moves(g, &[MoveKind::Add, MoveKind::Remove])),
                Some(r) => Box::new(g.non_edges().map(|a| Move::reconnect(*r, a))),
            };
            let mut p = Partial::default();
            for mv in moves {
                let l1 = eval(&mv);
                p.examined += 1;
                p.worst = Some(p.worst.map_or(l1, |w: f64| w.min(l1)));
                if l1 < threshold && p.violator.is_none() {
                    p.violator = Some(mv);
                }
                if let Some(ctx) = &ctx {
                    p.stats.entry(ctx.classify(&mv)).or_default().push(l1);
                }
            }
            p
        })
        .collect();

    let mut total = Partial::default();
    for p in partials {
        total.examined += p.examined;
        total.worst = match (total.worst, p.worst) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        total.violator = match (total.violator, p.violator) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        for (k, v) in p.stats {
            total.stats.entry(k).or_default().merge(&v);
        }
    }
    LelmReport {
        base_lambda1: base,
        worst_neighbor_lambda1: total.worst,
        violating_move: total.violator,
        neighborhood_size: size,
        examined: total.examined,
        verdict: total.violator.is_none(),
        case_stats: ctx.map(|_| total.stats),
    }
}

#[derive(Default)]
struct Partial {
    examined: usize,
    worst: Option<f64>,
    violator: Option<Move>,
    stats: BTreeMap<CaseLabel, CaseStat>,
}

/// Connection matrix of an add, embedded in `n` vertices with zero padding.
pub fn padded_connection_matrix(class: MoveClass, n: usize) -> Option<DenseMatrix> {
    let g = Graph::empty(n).ok()?;
    let mv = match class {
        MoveClass::Add if n >= 2 => Move::add(0, 1),
        MoveClass::ReconnectSame if n >= 3 => Move::reconnect((0, 1), (0, 2)),
        MoveClass::ReconnectIncr if n >= 4 => Move::reconnect((0, 1), (2, 3)),
        _ => return None,
    };
    let base = match mv.removed {
        Some((i, j)) => g.with_edge(i, j),
        None => g,
    };
    connection_matrix(&base, &mv).ok().map(|c| c.matrix.to_dense())
}
