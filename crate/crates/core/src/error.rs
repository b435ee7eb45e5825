use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("point ({0}, {1}, {2}) does not lie in the plane x1+x2+x3 = 0")]
    NotInPlane(String, String, String),

    #[error("apex ({0}, {1}, {2}) has non-positive height; its triangle is empty")]
    DegenerateApex(String, String, String),

    #[error("corner index must be 1, 2 or 3, got {0}")]
    InvalidCornerIndex(u8),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("self-loop on vertex `{0}` is not allowed")]
    SelfLoop(String),

    #[error("point set has dimension {expected}, point `{label}` has {got} coordinates")]
    DimensionMismatch {
        label: String,
        expected: usize,
        got: usize,
    },

    #[error("graph is not a block graph: {0}")]
    NotBlockGraph(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph has no cut vertex")]
    NoCutVertex,

    #[error("digraph is not a tournament: {0}")]
    NotTournament(String),

    #[error("sequence needs at least two members, got {0}")]
    SequenceTooShort(usize),

    #[error("pair is not crossing")]
    NotCrossing,

    #[error("triangle family does not realize the graph: {0}")]
    FamilyMismatch(String),

    #[error("no free side segment on the triangle of `{0}`; family is corrupted")]
    NoFreeSideSegment(String),

    #[error("partial-order conversion failed verification after {rounds} shrink rounds: {detail}")]
    ConversionFailed { rounds: u32, detail: String },

    #[error("unsupported schema version {0}, expected 1")]
    SchemaVersion(u64),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
