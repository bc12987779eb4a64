use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown coefficient distribution `{0}`")]
    UnknownDistribution(String),

    #[error("invalid parameters for distribution `{name}`: {reason}")]
    InvalidParams { name: String, reason: String },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,

    #[error("constant coefficient is zero")]
    ZeroConstantTerm,

    #[error("leading coefficient is zero")]
    ZeroLeadingCoefficient,

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("polynomial vanishes at interval endpoint {0}")]
    EndpointRoot(f64),

    #[error("polynomial is constant")]
    ConstantPolynomial,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("value not representable in double precision: {0}")]
    Overflow(String),

    #[error("invalid experiment configuration: {0}")]
    Config(String),

    #[error("experiment aborted: {0}")]
    Aborted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
