use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("invalid difference {d}: {reason}")]
    InvalidDifference { d: usize, reason: String },

    #[error("closed form mismatch in {family}: {detail}")]
    ClosedFormMismatch { family: String, detail: String },

    #[error("|φ(S)| = {size} does not divide the group order {order}")]
    NotATransversalCandidate { size: usize, order: usize },

    #[error("not constructible by this library: {reason} (see {citation})")]
    NotConstructible { reason: String, citation: String },

    #[error("no factorization exists: {0}")]
    InfeasibleInput(String),

    #[error("starter validation failed: {0}")]
    ValidationFailed(String),

    #[error("selection failed: {0}")]
    SelectionFailed(String),

    #[error("expanded factorization is inconsistent: {0}")]
    ExpansionInconsistent(String),

    #[error("group order {order} exceeds the search bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
