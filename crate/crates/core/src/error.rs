use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} needs {requested} vertices, limit is {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("degree sequence {0} is not graphic")]
    NotGraphic(String),

    #[error("graph is not a member of class {0}")]
    NotMember(String),

    #[error("invalid split partition: {0}")]
    InvalidPartition(String),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, requested: usize, limit: usize) -> Self {
        Error::Capacity {
            what,
            requested,
            limit,
        }
    }
}
