use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller supplied arguments outside an operation's domain.
    #[error("invalid input: {0}")]
    Input(String),

    /// A configured size bound (degree, group order, enumeration ceiling) was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A min-l search ran past its safety cap without meeting its threshold.
    #[error("no l <= {cap} satisfies the search condition ({what})")]
    SearchCap { cap: usize, what: String },

    /// A fixed-width scalar overflowed; rerun with the big-integer scalar.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// An exactness guarantee failed. This always indicates a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
