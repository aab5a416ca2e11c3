//! Error types shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by state construction, special functions and quadrature.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Invalid argument outside the documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A computed scale factor over- or underflowed f64 range.
    #[error("range error: {0}")]
    Range(String),

    /// The Coulomb coupling is too strong for a bound state of this l:
    /// gamma = Z*alpha must stay below l + 1/2.
    #[error("supercritical charge: Z*alpha = {gamma} >= {limit} (l = {l}); no real bound state")]
    Supercritical { gamma: f64, limit: f64, l: u32 },

    /// Quadrature did not converge within the level budget; carries the
    /// best estimate and the last observed level-to-level difference.
    #[error("quadrature did not converge: best estimate {best}, error estimate {error_estimate} after {evaluations} evaluations")]
    Convergence {
        best: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    /// The integrand returned a non-finite value at an interior node.
    #[error("integrand evaluated to a non-finite value at x = {x}")]
    Evaluation { x: f64 },

    /// The requested integral is provably divergent for this density.
    #[error("divergent integral: {0}")]
    Divergent(String),

    /// An information functional was handed a density that is not
    /// normalized to unit probability.
    #[error("density '{model}' is not unit-normalized; information measures require a probability density")]
    NotNormalized { model: String },
}
