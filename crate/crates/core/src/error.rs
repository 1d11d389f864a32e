use thiserror::Error;

/// Errors raised by graph construction, spectral computation and enumeration.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("vertex {0} is not a cut vertex")]
    NotCutVertex(usize),

    #[error("edge {{{0}, {1}}} lies on a cycle")]
    EdgeOnCycle(usize, usize),

    #[error("vertex set is not a component at vertex {0}")]
    NotAComponent(usize),

    #[error("parameters out of domain: {0}")]
    Domain(String),

    #[error("order {order} exceeds the cap of {cap} for {what}")]
    CapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("not a Fiedler vector: {0}")]
    NotFiedler(String),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("singular matrix")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
