use num_complex::Complex64;
use thiserror::Error;

use crate::sc::QuadratureReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested exactly at a branch point of the integrand.
    #[error("singular point at {0}")]
    SingularPoint(Complex64),

    /// The tolerance could not be met within the subdivision budget. The
    /// report holds the best value obtained.
    #[error(
        "quadrature did not converge: error estimate {:.3e} after {} subdivisions",
        .0.abs_error_estimate,
        .0.subdivisions
    )]
    Convergence(Box<QuadratureReport>),

    /// A series or integral that does not converge for these parameters.
    #[error("divergent: {0}")]
    Divergence(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("invalid map specification: {0}")]
    InvalidSpec(String),
}
