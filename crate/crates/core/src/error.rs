use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported family {family}({n})")]
    UnsupportedFamily { family: String, n: usize },

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("Weyl group enumeration exceeded {0} elements; datum is not of finite type")]
    NotFiniteType(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no matrix model registered for {0}")]
    NoModel(String),

    #[error("no split witness registered for {0}")]
    NoneRegistered(String),

    #[error("input is not a cocycle: first failing tuple {tuple:?}")]
    NotCocycle { tuple: Vec<usize> },

    #[error("module mismatch: {0}")]
    ModuleMismatch(String),

    #[error("subset is not closed under multiplication")]
    NotClosed,

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("divisor classes live on different curves")]
    CurveMismatch,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
