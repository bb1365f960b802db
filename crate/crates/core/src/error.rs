use thiserror::Error;

/// Reason a graph was rejected by interval recognition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotIntervalReason {
    /// The graph has a chordless cycle of length at least four.
    NotChordal,
    /// The graph is chordal but its maximal cliques admit no consecutive order.
    NoConsecutiveOrdering,
}

impl std::fmt::Display for NotIntervalReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotIntervalReason::NotChordal => f.write_str("not-chordal"),
            NotIntervalReason::NoConsecutiveOrdering => f.write_str("no-consecutive-ordering"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex id {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("interval of `{label}` has left endpoint {left} greater than right endpoint {right}")]
    InvalidInterval { label: String, left: i64, right: i64 },

    #[error("clique index range ({l}, {r}) invalid for an arrangement of {t} cliques")]
    PieceOutOfRange { l: usize, r: usize, t: usize },

    #[error("invalid clique arrangement: {0}")]
    InvalidArrangement(String),

    #[error("input has {size} elements, above the enumeration bound of {bound}")]
    TooLarge { size: usize, bound: usize },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not an interval graph ({0})")]
    NotInterval(NotIntervalReason),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("piece ({l}, {r}) is connected and not complete but no single vertex leaves a nonempty clique or a disconnected graph")]
    CharacterizationGap { l: usize, r: usize },

    #[error("component with span ({l}, {r}) does not coincide with the piece of that span")]
    PieceMismatch { l: usize, r: usize },

    #[error("no cut-strategy leaves a nonempty survival graph")]
    NoAdmissibleStrategy,

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
