//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, parsing, solving, and statistics.
#[derive(Debug, Error)]
pub enum Error {
    /// A graph file line could not be parsed. Line numbers are 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A vertex index fell outside `0..n`.
    #[error("vertex {v} out of range for a graph with {n} vertices")]
    VertexRange { v: usize, n: usize },

    /// A position/length argument fell outside its documented range.
    #[error("range error: {0}")]
    Range(String),

    /// An input violated a structural precondition (self-loop, dimension
    /// mismatch, infeasible spec, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// A rejection-sampling generator ran out of attempts.
    #[error("generation failed after {attempts} attempts: {msg}")]
    GenerationFailed { attempts: usize, msg: String },

    /// The exact solver exhausted its node-exploration budget.
    #[error("exploration budget of {budget} search-tree nodes exceeded")]
    BudgetExceeded { budget: u64 },

    /// A statistical test received input it cannot rank (e.g. all ties).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
