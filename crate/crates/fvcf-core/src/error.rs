use thiserror::Error;

/// Errors raised by the solver. Inadmissible thermodynamic states are
/// reported, never clamped; the diagnostic string carries the offending
/// location and values.
#[derive(Debug, Error)]
pub enum SolverError {
    #[error("inadmissible state: {0}")]
    InadmissibleState(String),
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("layer collapse: {0}")]
    LayerCollapse(String),
    #[error("conservation failure: {0}")]
    ConservationFailure(String),
    #[error("step rejected: {0}")]
    StepRejected(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, SolverError>;

impl SolverError {
    /// Prefix an error with a location, e.g. the cell or lane it came from.
    pub fn in_context(self, ctx: &str) -> SolverError {
        match self {
            SolverError::InadmissibleState(m) => {
                SolverError::InadmissibleState(format!("{ctx}: {m}"))
            }
            SolverError::Geometry(m) => SolverError::Geometry(format!("{ctx}: {m}")),
            SolverError::LayerCollapse(m) => SolverError::LayerCollapse(format!("{ctx}: {m}")),
            SolverError::ConservationFailure(m) => {
                SolverError::ConservationFailure(format!("{ctx}: {m}"))
            }
            SolverError::StepRejected(m) => SolverError::StepRejected(format!("{ctx}: {m}")),
            SolverError::Config(m) => SolverError::Config(format!("{ctx}: {m}")),
        }
    }
}
