use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported group {descriptor}: {reason}")]
    UnsupportedDescriptor { descriptor: String, reason: String },

    #[error("operation not available for family {0}")]
    UnsupportedFamily(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("verification failed: {0}")]
    VerificationFailure(String),

    #[error("the measure parameter x must be nonzero")]
    ZeroParameter,

    #[error("operands live in different groups")]
    GroupMismatch,

    #[error("cannot sample from a measure with negative coefficients")]
    NegativeCoefficients,

    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("polynomial is not monic")]
    NonMonic,

    #[error("{q} is not a regular prime here: {reason}")]
    NonRegularPrime { q: u32, reason: String },

    #[error("characteristic 2 is a bad prime for type B")]
    EvenCharacteristic,

    #[error("{what} needs {needed} steps, above the budget of {budget}")]
    Budget { what: String, needed: u128, budget: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn budget(what: impl Into<String>, needed: u128, budget: u128) -> Self {
        Error::Budget { what: what.into(), needed, budget }
    }
}
