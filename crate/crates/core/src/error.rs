use thiserror::Error;

use crate::annular::NotAnnularReason;
use crate::graph::{Edge, Vertex};
use crate::recognition::Certificate;

/// Which operand of a two-sided operation an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate arc {0}->{1}")]
    DuplicateArc(Vertex, Vertex),
    #[error("arc {}->{} not present", .0.0, .0.1)]
    ArcNotPresent(Edge),
    #[error("digraph is not strongly connected ({0})")]
    NotStronglyConnected(String),
    #[error("digraph too small: need at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error("host subdigraph equals the whole digraph")]
    HostEqualsGraph,
    #[error("no ear exists")]
    NoEar,
    #[error("no path between the two vertex sets")]
    NoPath,
    #[error("more than {0} directed cycles")]
    CycleBudgetExceeded(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no {l}-ring: directed cycle {cycle:?} has length not divisible by {l}")]
    NotRingable { l: usize, cycle: Vec<Vertex> },
    #[error("arc is not special on the {0:?} side")]
    NotSpecial(Side),
    #[error("split is invalid: {0}")]
    SplitInvalid(String),
    #[error("digraph is not 3-cyclic")]
    NotThreeCyclic(Box<Certificate>),
    #[error("digraph is not unbreakable")]
    NotUnbreakable,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("build step {index} is invalid: {reason}")]
    InvalidStep { index: usize, reason: String },
    #[error("invalid build script: {0}")]
    InvalidScript(String),
    #[error("digraph is not 3-annular: {0}")]
    NotAnnular(Box<NotAnnularReason>),
    #[error("weights do not form a weighting")]
    NotAWeighting,
    #[error("arcs lie in no directed cycle: {0:?}")]
    NonCycleArcs(Vec<Edge>),
    #[error("minimal obstruction is not a weak double-cycle: {0}")]
    PatternMismatch(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
