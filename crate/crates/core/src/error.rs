use thiserror::Error;

use crate::PointSet;

/// Why a family of sets failed to be a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmpty,
    MissingFull,
    /// `a ∪ b` is not in the family.
    UnionEscape(PointSet, PointSet),
    /// `a ∩ b` is not in the family.
    IntersectionEscape(PointSet, PointSet),
}

impl std::fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TopologyViolation::MissingEmpty => f.write_str("the empty set is missing"),
            TopologyViolation::MissingFull => f.write_str("the full set is missing"),
            TopologyViolation::UnionEscape(a, b) => {
                write!(f, "union of {a} and {b} is not open")
            }
            TopologyViolation::IntersectionEscape(a, b) => {
                write!(f, "intersection of {a} and {b} is not open")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a topology: {0}")]
    NotATopology(TopologyViolation),

    #[error("size limit exceeded: {what} is {got}, maximum is {max}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        max: usize,
    },

    #[error("set {set} is not contained in the {n}-point carrier")]
    OutOfRange { set: PointSet, n: usize },

    #[error("point {point} is out of range for a {n}-point space")]
    PointOutOfRange { point: usize, n: usize },

    #[error("a pair of distinct points is required, got ({0}, {0})")]
    SamePoint(usize),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("preorder is not reflexive at point {0}")]
    NotReflexive(usize),

    #[error("preorder is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("map is not continuous")]
    NotContinuous,

    #[error("codomain does not satisfy T{0}")]
    CodomainNotTi(u8),

    #[error("factorization through the quotient failed")]
    FactorizationFailure,

    #[error("space is not pre-Hausdorff: points {0} and {1} are T0- but not T2-separated")]
    NotPreHausdorff(usize, usize),

    #[error("axiom index must be 0, 1 or 2, got {0}")]
    BadAxiomIndex(u8),

    #[error("unknown example space `{0}`")]
    UnknownExample(String),

    #[error("invalid space document: {0}")]
    InvalidDocument(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
