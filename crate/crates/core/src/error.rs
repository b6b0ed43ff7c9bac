use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// How a failure should be reported to a caller such as the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input or invalid arguments.
    Input,
    /// The input is well formed but violates an operation's precondition.
    Precondition,
    /// A computed result failed a consistency check. Always a bug.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("moduli differ: Z[zeta_{left}] vs Z[zeta_{right}]")]
    ModulusMismatch { left: usize, right: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("graph has {n} vertices, exhaustive planning is limited to {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::Argument(_) | Error::Io(_) => ErrorKind::Input,
            Error::ModulusMismatch { .. } => ErrorKind::Input,
            Error::TooLarge { .. } | Error::Precondition(_) => ErrorKind::Precondition,
            Error::Singular | Error::Inconsistent(_) => ErrorKind::Internal,
        }
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
