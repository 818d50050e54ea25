use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph has no edges")]
    Edgeless,

    #[error("unsupported order {0} (graph6 short form covers 1..=62 vertices)")]
    UnsupportedOrder(usize),

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no closed-form value for {0}")]
    NoClosedForm(String),

    #[error("sweep budget exceeded: n_max={requested} > {budget}")]
    Budget { requested: usize, budget: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
