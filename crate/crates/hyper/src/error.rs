use hyperlab_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HyperError {
    #[error("carrier has {0} elements; the limit is {max}", max = crate::MAX_CARRIER)]
    TooLarge(usize),
    #[error("malformed hypermagma: {0}")]
    Shape(String),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("builtin `{name}` parameter out of range: {reason}")]
    ParamRange { name: String, reason: String },
    #[error("multiplication table required: {0}")]
    NeedsMul(String),
    #[error("tangible set required: {0}")]
    NeedsTangibles(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
