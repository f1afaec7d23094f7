use thiserror::Error;

/// Errors raised by the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected ({components} components); decompose it first")]
    Disconnected { components: usize },
    #[error("unknown generator {0:?}")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("no edge between {0} and {1}")]
    NotAnEdge(String, String),
    #[error("{0} is not a sink")]
    NotASink(String),
    #[error("{0} is not a source")]
    NotASource(String),
    #[error("orientation contains a directed cycle")]
    Cyclic,
    #[error("orientation must give every edge a direction; missing {0}")]
    IncompleteOrientation(String),
    #[error("objects belong to different graphs")]
    GraphMismatch,
    #[error("edge {0}-{1} is a trunk edge")]
    TrunkEdge(String, String),
    #[error("state budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("not a Coxeter word: {0}")]
    NotCoxeterWord(String),
    #[error("word lacks the intervening neighbours property")]
    MissingInterveningNeighbours,
    #[error("word does not contain generator {0}")]
    MissingLetter(String),
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("the two Coxeter elements are not conjugate")]
    NotConjugate,
    #[error("illegal step {step} in trace: {reason}")]
    IllegalStep { step: usize, reason: String },
    #[error("representation does not fit this graph: {0}")]
    RepresentationMismatch(String),
    #[error("representation invariant violated: {0}")]
    InvalidRepresentation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
