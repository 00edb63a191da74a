use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("vertex {0} out of range")]
    BadVertex(usize),
    #[error("edge {0}-{1} not in graph")]
    MissingEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("state {0} is not valid for k={1}")]
    BadState(String, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no nonempty proper subset")]
    NoProperSubset,
    #[error("invalid gadget kind {0} for k={1}")]
    BadGadgetKind(String, usize),
    #[error("enumeration budget exceeded: gadget has {0} vertices")]
    EnumerationTooLarge(usize),
    #[error("gadget check failed: {0}")]
    GadgetCheckFailed(String),
    #[error("vertex {0} is precolored I; charges are defined only for U and F states")]
    IVertexInCharge(usize),
    #[error("y and z must be distinct")]
    ThreadEndpointsEqual,
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
