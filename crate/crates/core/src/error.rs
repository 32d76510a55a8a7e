use thiserror::Error;

/// Errors raised by the toolkit.
///
/// `Input` and `Parse` are user mistakes (bad graph files, violated
/// preconditions). `Counterexample` means a proven statement failed on a
/// concrete instance, which can only be a bug in this code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("{0}")]
    Input(String),

    #[error("verification counterexample: {0}")]
    Counterexample(String),
}

impl Error {
    pub(crate) fn input(message: impl Into<String>) -> Self {
        Error::Input(message.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn counterexample(message: impl Into<String>) -> Self {
        Error::Counterexample(message.into())
    }

    /// True for user-facing input problems (exit status 1 in the CLI).
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Counterexample(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
