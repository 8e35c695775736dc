use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("energy {energy} lies on (or within {distance:e} of) the Landau level {level}")]
    Pole { energy: f64, level: u32, distance: f64 },

    #[error("series did not converge after {terms} terms (last term {last_term:e}, tail bound {tail_bound:e})")]
    NonConvergence {
        terms: usize,
        last_term: f64,
        tail_bound: f64,
    },

    #[error("coupling strength must be nonzero for the scalar eigenvalue condition")]
    InvalidCoupling,

    #[error("root finder failed: {0}")]
    RootFinding(String),

    #[error("grid configuration: {0}")]
    Grid(String),

    #[error("postcondition violated: {0}")]
    Postcondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures that come from the numerics rather than from the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. } | Error::RootFinding(_) | Error::Postcondition(_)
        )
    }
}
