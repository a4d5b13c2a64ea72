use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex label {label} out of range for pair ({i}, {j}) with n = {n}")]
    LabelOutOfRange { i: usize, j: usize, label: usize, n: usize },
    #[error("self-loop pair ({0}, {0})")]
    SelfLoop(usize),
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("edge-list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix is not symmetric (max asymmetry {max_asymmetry:e})")]
    NotSymmetric { max_asymmetry: f64 },
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("edge count {m} exceeds C({n}, 2) = {max}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid circulant set: {0}")]
    InvalidCirculant(String),
    #[error("no symmetric connection set of size {d} exists for n = {n}: {reason}")]
    NoSymmetricSet { n: usize, d: usize, reason: String },
    #[error("{what} supports n <= {cap}, got n = {n}")]
    SizeCap { what: &'static str, n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
