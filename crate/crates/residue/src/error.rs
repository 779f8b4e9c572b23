use hyperlab_core::CoreError;
use hyperlab_hyper::HyperError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ResidueError {
    #[error("subgroup invalid: {0}")]
    NotAGroup(String),
    #[error("subgroup not normal for the module: {0}")]
    NotNormal(String),
    #[error("unknown field order {0}; available: 2, 3, 4, 5, 7, 8, 9")]
    UnknownField(usize),
    #[error("no unit class: {0}")]
    NoUnit(String),
    #[error("additive negation unavailable: {0}")]
    NeedsNegation(String),
    #[error("quotient base invalid: {0}")]
    BadBase(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Hyper(#[from] HyperError),
}
