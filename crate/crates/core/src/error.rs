use thiserror::Error;

/// Errors surfaced by the solver library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fell outside the operation's domain (negative intrinsic
    /// value, probability outside [0, 1], and so on).
    #[error("domain error: {0}")]
    Domain(String),

    /// A model or distribution parameter failed validation.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A conditional expectation was requested over an interval that carries
    /// no probability mass.
    #[error("empty bin: [{lo}, {hi}) has zero mass")]
    EmptyBin { lo: f64, hi: f64 },

    /// Numerical integration did not reach the requested tolerance within the
    /// subdivision cap.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// An iterative solver ran out of iterations. `last` carries the final
    /// iterate so callers can inspect how far it got.
    #[error("solver did not converge: {context} (last iterate {last:?}, residual {residual:.3e})")]
    NonConvergence {
        context: String,
        last: Vec<f64>,
        residual: f64,
    },

    /// A threshold design is structurally incompatible with the distribution
    /// (bins pushed outside the support, ordering violated at the solution).
    #[error("infeasible design: {0}")]
    InfeasibleDesign(String),
}

pub type Result<T> = std::result::Result<T, Error>;
