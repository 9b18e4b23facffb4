use thiserror::Error;

use crate::partition::{Node, Partition};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition term `{term}`: {reason}")]
    Parse { term: String, reason: String },

    #[error("{0} is not a prime")]
    NotPrime(usize),

    #[error("bead count {beads} is invalid for p = {p} and {parts} parts: {reason}")]
    BeadCount {
        beads: usize,
        p: usize,
        parts: usize,
        reason: &'static str,
    },

    #[error("node ({}, {}) is not removable from {partition}", node.row, node.col)]
    NotRemovable { node: Node, partition: Partition },

    #[error("node ({}, {}) is not addable to {partition}", node.row, node.col)]
    NotAddable { node: Node, partition: Partition },

    #[error("position {position} does not hold a removable bead")]
    NotRemovableBead { position: usize },

    #[error("{partition} is not a {p}-core")]
    NotACore { partition: Partition, p: usize },

    #[error("partitions have different sizes ({left} and {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("the empty partition has no removable nodes")]
    EmptyPartition,

    #[error("quotient has {got} components, expected {expected}")]
    QuotientLength { got: usize, expected: usize },

    #[error("invalid beta-sequence: {0}")]
    InvalidBeta(String),

    #[error("invalid abacus display: {0}")]
    InvalidDisplay(String),
}
