use thiserror::Error;

/// Errors raised by the algebra routines and the expression front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero element")]
    DivisionByZero,

    #[error("{0}: the zero polynomial is not allowed here")]
    ZeroPolynomial(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix side {side} exceeds the limit of {max}")]
    TooLarge { side: usize, max: usize },

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at offset {pos}")]
    UnknownVariable { pos: usize, name: String },

    #[error("malformed rational at offset {pos}: {msg}")]
    BadRational { pos: usize, msg: String },

    /// An internal cross-check between two independent computations failed.
    #[error("inconsistency detected: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for the syntax-level variants produced by the parser.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::UnknownVariable { .. } | Error::BadRational { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
