use thiserror::Error;

/// Errors raised while constructing graphs or evaluating parameterised formulas.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    EmptyDomain,

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no closed form is published for {0}")]
    NoClosedForm(String),

    #[error("vertex count {0} is outside the enumeration range 1..=7")]
    EnumerationCap(usize),

    #[error("0^{exponent} is undefined (graph has an isolated vertex)")]
    Domain { exponent: f64 },

    #[error("{0} relates two graphs and cannot be evaluated on a single graph")]
    NotSingleGraph(&'static str),
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
