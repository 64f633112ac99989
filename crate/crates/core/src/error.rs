/// Error type shared across the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input outside an operation's domain (bad element, wrong length, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition does not hold for the given arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A search or enumeration exceeded its configured budget.
    #[error("budget exhausted: {message} (levels completed: {levels_completed})")]
    Budget {
        message: String,
        levels_completed: usize,
    },

    /// Malformed input text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An invariant the code relies on was violated; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),

    /// A generalized DC-tree construction hit a node whose unique union is
    /// empty before the minor reduced to loops and bridges.
    #[error("construction stalled at sigma {sigma:?} (deleted {deleted:?}, contracted {contracted:?})")]
    Stall {
        deleted: Vec<String>,
        contracted: Vec<String>,
        sigma: Vec<usize>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
