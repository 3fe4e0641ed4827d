use thiserror::Error;

/// Errors produced by the evaluators, series algebra and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {field} = {value} ({reason})")]
    Domain {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// Two series built on different fractional orders were combined.
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: f64, right: f64 },

    #[error("empty input: {0}")]
    Empty(&'static str),

    /// The geometric closed form was evaluated where its ratio is not contractive.
    #[error("geometric series ratio |q| = {q} is not below 1")]
    Convergence { q: f64 },

    #[error("singular parameters: {0}")]
    Singular(String),

    #[error("unsupported: {0}")]
    Unsupported(&'static str),

    /// The implicit corrector failed at grid index `step`.
    #[error("solver failure at step {step} (t = {t}): {reason}")]
    SolverFailure { step: usize, t: f64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(field: &'static str, value: f64, reason: &'static str) -> Error {
    Error::Domain {
        field,
        value,
        reason,
    }
}
