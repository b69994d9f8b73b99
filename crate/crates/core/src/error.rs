use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable `{0}` has no assigned value")]
    MissingVariable(String),

    #[error("derivative order overflow: f^({order}) exceeds the maximum order {max}")]
    OrderOverflow { order: usize, max: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no sign change of {what} on [{lo}, {hi}] (values {f_lo:e} and {f_hi:e})")]
    BracketFailure {
        what: String,
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("{count} sign changes of {what} found; expected exactly one")]
    MultipleRoots { what: String, count: usize },

    #[error("no real branch of the cube root: {0}")]
    BranchSelection(String),

    #[error("undefined: {0}")]
    Undefined(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
