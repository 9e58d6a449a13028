use thiserror::Error;

/// Errors produced by the series engine, the class models and the solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BohrError {
    /// An argument lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Class parameters violate the class's admissible range.
    #[error("invalid parameters: {0}")]
    Validation(String),

    /// The input does not satisfy a structural precondition of the algorithm.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The requested tolerance could not be reached.
    #[error("tolerance {requested:e} not reached after {terms} terms (achieved bound {achieved:e})")]
    Convergence {
        requested: f64,
        achieved: f64,
        terms: usize,
    },

    /// The Bohr equation shows no sign change on the search bracket.
    #[error("no sign change of H on [{lo}, {hi}]: H(lo) = {h_lo:e}, H(hi) >= {h_hi:e}")]
    NoSignChange { lo: f64, hi: f64, h_lo: f64, h_hi: f64 },

    /// Bisection did not shrink the bracket below the tolerance.
    #[error("bracket width {width:e} above tolerance after {iterations} iterations")]
    MaxIterations { iterations: usize, width: f64 },
}

impl BohrError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        BohrError::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        BohrError::Validation(msg.into())
    }

    /// True for failures caused by bad user input rather than by the numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(self, BohrError::Domain(_) | BohrError::Validation(_))
    }
}

pub type Result<T> = std::result::Result<T, BohrError>;
