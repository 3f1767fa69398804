use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("{0} must not be empty")]
    Empty(&'static str),
    #[error("universe has {0} elements; at most 64 are supported")]
    UniverseTooLarge(usize),
    #[error("operands live over different universes")]
    UniverseMismatch,
    #[error("operands live over different parameter sets")]
    ParamMismatch,
    #[error("parameter sets do not intersect")]
    DisjointParams,
    #[error("inverse image needs a slice for parameter `{0}`")]
    MissingSlice(String),
    #[error("invalid soft mapping: {0}")]
    InvalidMapping(String),
    #[error("not a soft topology: {0}")]
    NotTopology(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not soft continuous: {0}")]
    NotContinuous(String),
    #[error("not a soft topological group: {0}")]
    NotSoftTopGroup(String),
    #[error("cannot compose: {0}")]
    Composition(String),
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("degenerate interval: {0}")]
    DegenerateInterval(String),
    #[error("value {0} is outside the range of the path")]
    OutOfRange(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("{0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
