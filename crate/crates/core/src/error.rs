use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),

    #[error("self-loop on `{0}`")]
    SelfLoop(String),

    #[error("invalid vertex name `{0}` (letters, digits and underscore only)")]
    InvalidName(String),

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },

    #[error("directed part contains a cycle through `{vertex}`")]
    DirectedCycle { vertex: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("parameter generation failed: {0}")]
    Generation(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
