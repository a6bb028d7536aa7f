use alloc::string::String;

use thiserror::Error;

/// Validation failures when building or addressing a [`crate::Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("relabeling is not a permutation of the vertex set")]
    NotAPermutation,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The request is larger than the exact routine is allowed to handle.
    #[error("budget exceeded: {what} is {value}, limit {limit}")]
    BudgetExceeded { what: &'static str, value: usize, limit: usize },
    #[error("power iteration did not converge within {iterations} iterations (estimate {estimate})")]
    NotConverged { iterations: usize, estimate: f64 },
    /// A construction failed its own post-condition check; always a bug.
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
