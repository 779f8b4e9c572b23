use hyperlab_core::CoreError;
use hyperlab_hyper::HyperError;
use hyperlab_residue::ResidueError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("bound {requested} needs more than {cap} terms; the largest feasible bound is {feasible}", cap = crate::TERM_ENUM_CAP)]
    Resource { requested: usize, feasible: usize },
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("closure not saturated at bound {bound}; result undetermined")]
    Unsaturated { bound: usize },
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("internal consistency violated: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error(transparent)]
    Residue(#[from] ResidueError),
}
