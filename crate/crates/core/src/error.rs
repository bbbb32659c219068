use thiserror::Error;

use crate::set::ElementSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a family of sets fails to be a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyDefect {
    MissingEmpty,
    MissingFull,
    MissingUnion(ElementSet, ElementSet),
    MissingIntersection(ElementSet, ElementSet),
    Duplicate(ElementSet),
}

impl std::fmt::Display for TopologyDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TopologyDefect::MissingEmpty => f.write_str("missing empty set"),
            TopologyDefect::MissingFull => f.write_str("missing full set"),
            TopologyDefect::MissingUnion(a, b) => {
                write!(f, "missing union {a} ∪ {b} = {}", *a | *b)
            }
            TopologyDefect::MissingIntersection(a, b) => {
                write!(f, "missing intersection {a} ∩ {b} = {}", *a & *b)
            }
            TopologyDefect::Duplicate(a) => write!(f, "duplicate open set {a}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("carrier size {n} is outside 1..={max}")]
    CarrierSize { n: usize, max: usize },

    #[error("table must be {n}x{n}, row {row} has {len} entries")]
    TableShape { n: usize, row: usize, len: usize },

    #[error("table entry {value} at ({row},{col}) is out of range for a carrier of size {n}")]
    MalformedTable {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("operation is not associative: ({x}·{y})·{z} ≠ {x}·({y}·{z})")]
    NotAssociative { x: usize, y: usize, z: usize },

    #[error("element {0} is not idempotent, so the semigroup is not a band")]
    NotABand(usize),

    #[error("not a semilattice: {0}")]
    NotASemilattice(String),

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("set {set} has elements outside a carrier of size {n}")]
    OutOfCarrier { set: ElementSet, n: usize },

    #[error("not a topology: {0}")]
    NotATopology(TopologyDefect),

    #[error("carrier sizes differ: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("{what} exceeds the limit of {limit}")]
    TooLarge { what: &'static str, limit: usize },

    #[error("operation requires a non-empty set")]
    EmptySet,

    #[error("operation requires a non-empty family")]
    EmptyFamily,

    #[error("points must be distinct (got {0} twice)")]
    SamePoint(usize),

    #[error("map is not a homomorphism: h({x}·{y}) ≠ h({x})·h({y})")]
    NotAHomomorphism { x: usize, y: usize },

    #[error("map is not continuous: preimage of open set {0} is not open")]
    NotContinuous(ElementSet),

    #[error("map has {len} entries but the source has {n} elements")]
    MapShape { len: usize, n: usize },

    #[error("map value {value} is outside a target of size {n}")]
    MapValue { value: usize, n: usize },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("invalid rule `{id}`: {reason}")]
    InvalidRule { id: String, reason: String },

    #[error("value {value} for {what} is outside {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("derived topologies violate an inclusion: {0}")]
    BundleInvariant(String),
}
