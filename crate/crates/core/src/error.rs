use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps these onto process exit codes: `Inconsistency` is exit 1,
/// `Usage` is exit 64, and everything else (bad input, unmet preconditions,
/// I/O) is exit 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text could not be parsed as a graph. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An operation was called outside its domain (empty graph, r < 2, ...).
    #[error("{0}")]
    Domain(String),

    /// The minimum-degree precondition of the theorem does not hold.
    ///
    /// `required` spells out the failed integer comparison, e.g.
    /// `"5*delta >= 2*n"`.
    #[error("threshold not met: delta={delta}, n={n}, r={r}, required {required}")]
    ThresholdNotMet {
        delta: usize,
        n: usize,
        r: usize,
        required: String,
    },

    /// A state the theorem rules out was reached. Always a defect, never
    /// swallowed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// Bad command-line arguments or out-of-range campaign parameters.
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// Process exit code for this error per the CLI contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistency(_) => 1,
            Error::Usage(_) => 64,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
