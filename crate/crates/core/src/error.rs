use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-contract input. `line` is 1-based when the input came from text.
    #[error("input error{}: {message}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
    Input { line: Option<usize>, message: String },

    /// A configured cap (search nodes, family size, vertex count) was exceeded.
    #[error("resource limit exceeded: {what} (limit {limit}, reached {reached})")]
    Resource { what: String, limit: u64, reached: u64 },

    /// A self-check on a computed answer failed.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// The problem instance has no feasible solution.
    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(message: impl Into<String>) -> Self {
        Error::Input { line: None, message: message.into() }
    }

    pub fn input_at(line: usize, message: impl Into<String>) -> Self {
        Error::Input { line: Some(line), message: message.into() }
    }

    pub fn resource(what: impl Into<String>, limit: u64, reached: u64) -> Self {
        Error::Resource { what: what.into(), limit, reached }
    }
}
