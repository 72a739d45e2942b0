use thiserror::Error;

/// Errors produced by rate formulas, solvers and the trajectory oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("spectral density diverges at angular frequency {frequency}")]
    Divergent { frequency: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("envelope never reaches 1/e for t <= {horizon:e}")]
    NoCrossing { horizon: f64 },

    #[error("all relevant decay rates vanish, decay time diverges")]
    DivergentTime,

    #[error("oracle configuration: {0}")]
    Config(String),

    #[error("decay not resolved: {0}")]
    Inconclusive(String),

    #[error("at {point}: {source}")]
    AtPoint { point: String, source: Box<Error> },
}

impl Error {
    /// Attach the sweep point at which the error occurred.
    pub fn at(self, point: impl Into<String>) -> Error {
        Error::AtPoint { point: point.into(), source: Box::new(self) }
    }

    /// The error with any sweep-point wrappers removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtPoint { source, .. } => source.root(),
            e => e,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
