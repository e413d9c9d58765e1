use thiserror::Error;

/// Errors reported by parsing, the operators, the bijections, and the
/// counting routines. Every rejected input maps to a distinct variant so
/// callers can tell malformed syntax from domain violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element {0}")]
    DuplicateElement(usize),
    #[error("element {element} outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("missing element {0}")]
    MissingElement(usize),
    #[error("empty block")]
    EmptyBlock,
    #[error("malformed partition syntax: {0}")]
    MalformedPartition(String),
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),
    #[error("ground set must be non-empty")]
    EmptyGroundSet,
    #[error("partition is not noncrossing")]
    NotNoncrossing,
    #[error("rotation class is not achiral")]
    NotAchiral,
    #[error("partition is not self-complementary")]
    NotSelfComplementary,
    #[error("ground set size {0} is odd; an even size is required")]
    OddGroundSet(usize),
    #[error("illegal path character {0:?} (expected 'U' or 'D')")]
    IllegalPathChar(char),
    #[error("path is not a Dyck path")]
    NotDyck,
    #[error("path is not balanced")]
    NotBalanced,
    #[error("path is empty")]
    EmptyPath,
    #[error("malformed tree syntax: {0}")]
    MalformedTree(String),
    #[error("improper 2-coloring: adjacent vertices share a color")]
    ImproperColoring,
    #[error("tree has no edges")]
    EmptyTree,
    #[error("{what}({n}) exceeds the brute-force budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        n: usize,
        budget: usize,
    },
    #[error("exact integer overflow computing {0}")]
    Overflow(&'static str),
    #[error("{d} is not a proper divisor of {n}")]
    InvalidClickDivisor { d: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
