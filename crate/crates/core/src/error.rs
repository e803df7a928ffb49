use thiserror::Error;

/// Errors raised by the numerical routines and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole at x = {0}")]
    Pole(f64),

    #[error("result exceeds the representable range (log magnitude {0})")]
    Overflow(f64),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    /// No series domain or parameter collapse covers the requested F3 evaluation.
    #[error("evaluation not supported in this parameter region: {0}")]
    DomainUnsupported(String),

    #[error("Wright series diverges: delta = {0} is not > -1")]
    Convergence(f64),

    #[error("series did not reach tolerance within {0} terms")]
    TermCap(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("quadrature stalled: estimate {estimate:e} above tolerance after {levels} levels")]
    Quadrature { estimate: f64, levels: usize },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
