use std::io;

/// Errors surfaced by the command-line layer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] lowdisc_core::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code: 2 for validation failures, 3 for exceeded budgets.
    pub fn exit_code(&self) -> i32 {
        use lowdisc_core::Error as C;
        match self {
            Error::Core(
                C::WorkBudgetExceeded { .. }
                | C::SizeRejected { .. }
                | C::PrecisionBudgetExceeded { .. }
                | C::PrecisionExhausted { .. },
            ) => 3,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}

pub(crate) fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}
