use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at index {index}: unexpected {found:?}")]
    Parse { index: usize, found: char },

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("blocks cross at {a} < {b} < {c} < {d}")]
    Crossing {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("division is not exact, remainder {0}")]
    NonExactDivision(String),

    #[error("unknown {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },

    #[error("size {n} exceeds the limit {limit}; pass --max to override")]
    SizeLimit { n: usize, limit: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::InvalidObject(_) => "invalid-object",
            Error::Crossing { .. } => "crossing",
            Error::Domain(_) => "domain",
            Error::NonExactDivision(_) => "non-exact-division",
            Error::UnknownName { .. } => "unknown-name",
            Error::SizeLimit { .. } => "size-limit",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidObject(msg.into())
}

pub(crate) fn unknown(kind: &'static str, name: &str) -> Error {
    Error::UnknownName {
        kind,
        name: name.to_string(),
    }
}
