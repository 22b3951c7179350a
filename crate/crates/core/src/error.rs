use thiserror::Error;

/// Errors produced by the analysis library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph input. `line` is 1-based and refers to the offending
    /// input line (0 when the location is not line-oriented, e.g. JSON).
    #[error("input error (line {line}): {msg}")]
    InputFormat { line: usize, msg: String },

    /// An operation that requires a connected graph was invoked on a
    /// disconnected one. Split into components first (the CLI does this).
    #[error("graph is disconnected: {0}; analyze per connected component")]
    Disconnected(String),

    /// An enumeration would exceed the configured budget.
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: usize,
        limit: usize,
    },

    /// A precondition of an operation was violated by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two routes that must agree (structural theorems vs. fiber oracle)
    /// disagreed. This is a defect, never a normal outcome.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn input(line: usize, msg: impl Into<String>) -> Self {
        Error::InputFormat {
            line,
            msg: msg.into(),
        }
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InputFormat { .. } => 2,
            Error::BudgetExceeded { .. } => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
