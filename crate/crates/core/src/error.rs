use thiserror::Error;

/// Errors shared by the exact and floating-point layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the contract of the operation (wrong parity, sign, range).
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Parameters outside the analytic domain of the formula.
    #[error("outside domain: {0}")]
    Domain(String),
    /// A genuinely infinite value (gamma pole, unresolvable 0*inf collision).
    #[error("pole: {0}")]
    Pole(String),
    /// A truncated series or quadrature could not reach the requested accuracy.
    #[error("did not converge: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
