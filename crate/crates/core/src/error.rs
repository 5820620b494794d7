use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("cannot parse {what}: {message}")]
    Parse { what: &'static str, message: String },

    #[error("table does not define a group: {0}")]
    NotAGroup(String),

    #[error("permutation closure exceeds cap of {cap} elements")]
    ClosureTooLarge { cap: usize },

    #[error(
        "Cayley table of order {order} is above the associativity-check limit {limit}; \
         pass the trust flag to accept it unchecked"
    )]
    UncheckedTable { order: usize, limit: usize },

    #[error("{p} is not a prime divisor of the group order {order}")]
    NotAPrimeDivisor { p: u64, order: usize },

    #[error("no maximal cyclic subgroup of {p}-power order")]
    EmptyFamily { p: u64 },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has diameter {0}; the reduction requires diameter at most 2")]
    DiameterTooLarge(u32),

    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(what: &'static str, message: impl Into<String>) -> Self {
        Error::Parse {
            what,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
