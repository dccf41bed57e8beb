use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("out of supported range: {0}")]
    OutOfRange(String),

    /// A Laurent division that should have been exact left a remainder.
    #[error("non-exact division: {0}")]
    NonExactDivision(String),

    /// A representation-theoretic invariant failed; this is a bug, not bad input.
    #[error("invariant breach: {0}")]
    InvariantBreach(String),

    #[error("not converged after {iterations} iterations")]
    NotConverged { iterations: usize },

    #[error("pole at evaluation point: factor {0} vanishes")]
    Pole(String),

    #[error("polytope is not full-dimensional (dim {dim} in ambient {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("point is unstable")]
    Unstable,
}

impl Error {
    /// Short machine-readable code used in CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::InvalidInput(_) => "invalid_input",
            Error::Parse(_) => "parse",
            Error::OutOfRange(_) => "out_of_range",
            Error::NonExactDivision(_) => "non_exact_division",
            Error::InvariantBreach(_) => "invariant_breach",
            Error::NotConverged { .. } => "not_converged",
            Error::Pole(_) => "pole",
            Error::NotFullDimensional { .. } => "not_full_dimensional",
            Error::Unstable => "unstable",
        }
    }
}

pub(crate) fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}
