use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("entry {0} occurs more than once")]
    RepeatedEntry(u32),

    #[error("entries must be positive integers")]
    ZeroEntry,

    #[error("entries are not exactly 1..={0}")]
    NotAPermutation(usize),

    #[error("value {value} is outside 1..={len}")]
    OutOfRange { value: u32, len: usize },

    #[error("star constraints need an even-length host, got length {0}")]
    OddHost(usize),

    #[error("a signed permutation needs even length, got {0}")]
    OddLength(usize),

    #[error("symmetry fails at position {index}: {left} + {right} != {target}")]
    SymmetryViolation { index: usize, left: u32, right: u32, target: u32 },

    #[error("{what} is {value}, above the limit {limit}")]
    Guard { what: &'static str, value: usize, limit: usize },

    #[error("the cover relation contains a cycle")]
    Cycle,

    #[error("not a lattice: {left} and {right} have incomparable {kind} bounds {first} and {second}")]
    NotALattice { kind: &'static str, left: String, right: String, first: String, second: String },

    #[error("{lower} -> {upper} is not a cover (it is implied by other covers)")]
    RedundantCover { lower: String, upper: String },

    #[error("element {0} is not in the lattice")]
    UnknownElement(String),

    #[error("duplicate element {0}")]
    DuplicateElement(String),

    #[error("the lattice has no elements")]
    Empty,

    #[error("congruence class of {element} is not an interval: {first} and {second} are both {kind}")]
    NonIntervalClass { kind: &'static str, element: String, first: String, second: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{0}")]
    Parameter(String),

    #[error("{dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("series operation failed: {0}")]
    Series(String),

    #[error("fixed-point iteration for {0} did not settle")]
    NonConvergence(&'static str),
}
