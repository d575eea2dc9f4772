use thiserror::Error;

use crate::dynkin::Family;
use crate::nodeset::NodeSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid diagram `{input}`: {reason}")]
    Grammar { input: String, reason: String },

    #[error("{family}{rank} is out of range: {family}_n requires {range}")]
    RankOutOfRange {
        family: Family,
        rank: usize,
        range: &'static str,
    },

    #[error("{family} has no diagram of rank {rank}")]
    NoSuchExceptional { family: Family, rank: usize },

    #[error("diagrams of total rank {0} are not supported (maximum is {max})", max = NodeSet::CAPACITY)]
    RankTooLarge(usize),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("root generation exceeded {limit} roots; the Cartan matrix is not of finite type")]
    GenerationLimit { limit: usize },

    #[error("node {node} is out of range for a diagram of rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("tag has length {tag} but the diagram has rank {rank}")]
    TagLength { tag: usize, rank: usize },

    #[error("invalid tag literal `{0}`: expected comma-separated non-negative integers")]
    TagLiteral(String),

    #[error("node {node} has tag entry {value}, expected 1")]
    NotAOneNode { node: usize, value: u32 },

    #[error("splitting type must be weakly increasing: {0:?}")]
    NotMonotone(Vec<i64>),

    #[error("splitting type must be strictly increasing (a_1 < ... < a_r): {0:?}")]
    NotStrictlyIncreasing(Vec<i64>),

    #[error("splitting type needs at least two entries, got {0}")]
    SplittingTooShort(usize),

    #[error("diagram `{0}` is not connected of type A")]
    NotTypeA(String),

    #[error("subset {set} does not contain the zero set I_0 = {zeros}; reducibility is only defined for sets containing I_0")]
    MissingZeroSet { set: NodeSet, zeros: NodeSet },

    #[error("subset {0} is not a proper subset of the diagram's nodes")]
    NotProper(NodeSet),

    #[error("chain is not strictly increasing at member {position}: {previous} is not a proper subset of {current}")]
    ChainNotIncreasing {
        position: usize,
        previous: NodeSet,
        current: NodeSet,
    },

    #[error("sequence is not a permutation of the positive roots: {0}")]
    NotAPermutation(String),

    #[error("insufficient hypotheses: {0}")]
    InsufficientHypotheses(String),
}
