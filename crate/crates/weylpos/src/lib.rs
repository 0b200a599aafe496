//! Exact-arithmetic constructions over simply-laced Weyl group data.
//!
//! The crate starts from a plain graph, recognizes the simply-laced Dynkin
//! diagrams via positive harmonic functions on their affine extensions, and
//! builds everything else on top of the resulting root system: reduced words
//! of the longest element and the braid-move graph connecting them
//! ([`weyl`]), chart coordinates over an arbitrary semifield with the
//! transition maps between charts ([`semifields`], [`upoints`]), the
//! positivity involution in closed, matrix and tropical form ([`phi`]),
//! enumeration of tropical canonical index sets against the Weyl dimension
//! formula ([`reps`]), and the explicit two-chart basis pairs of the rank-1
//! and rank-2 coordinate rings ([`rings`]).
//!
//! All arithmetic is exact: arbitrary-precision rationals, integers, or
//! univariate rational functions. No floating point is used anywhere.

pub mod diagrams;
pub mod linalg;
pub mod phi;
pub mod poly;
pub mod ratfun;
pub mod reps;
pub mod rings;
pub mod semifields;
pub mod upoints;
pub mod weyl;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("not a simply-laced Dynkin diagram: {0}")]
    NotSimplyLaced(String),
    #[error("harmonic value at `{0}` is not 1")]
    HarmonicValueNotOne(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("word does not represent the longest element")]
    NotLongest,
    #[error("rank {rank} unsupported for {feature}")]
    RankUnsupported { rank: usize, feature: &'static str },
    #[error("diagram mismatch between operands")]
    DiagramMismatch,
    #[error("braid window must have length 2 or 3, got {0}")]
    BadWindow(usize),
    #[error("zero polynomial is not a semifield element")]
    ZeroPolynomial,
    #[error("value must be positive, got {0}")]
    NotPositive(String),
    #[error("input not totally positive")]
    NotTotallyPositive,
    #[error("not in the positive cell")]
    NotInPositiveCell,
    #[error("enumeration budget exceeded ({0} points scanned)")]
    BudgetExceeded(u64),
    #[error("degree bound exceeded: {0}")]
    DegreeExceeded(String),
    #[error("element is not in the span of the basis")]
    NotInSpan,
    #[error("index constraint violated: {0}")]
    BadIndex(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("capability not available: {0}")]
    Capability(String),
}

pub type Result<T> = std::result::Result<T, Error>;
