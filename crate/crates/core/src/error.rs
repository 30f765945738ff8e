use thiserror::Error;

/// Errors raised by graph queries, invariant evaluation, enumeration and the codecs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied argument is malformed (vertex id out of range, wrong degree, bad parameter).
    #[error("input error: {0}")]
    Input(String),
    /// The quantity is not defined for this graph or parameter (disconnected diameter, edgeless index).
    #[error("domain error: {0}")]
    Domain(String),
    /// The request exceeds a hard size cap.
    #[error("capacity error: {what} {requested} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    /// graph6 decoding failure at a byte offset within the line.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    /// Edge-list parsing failure at a 1-based line number.
    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },
    /// The operation has no definition for the requested family.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn capacity(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::Capacity {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
