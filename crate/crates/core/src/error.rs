use thiserror::Error;

/// Everything that can go wrong between parsing a polynomial and reporting
/// its refined roots.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by an interval containing zero")]
    DivisionByIntervalContainingZero,

    #[error("polynomial is not square-free")]
    NotSquareFree,

    #[error("polynomial must have degree at least 1")]
    ConstantInput,

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("gcd(f, f'') is not 1; no monotonic convex isolation is guaranteed (run lmcd first)")]
    MciNotGuaranteed,

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("f does not change sign on the interval")]
    NotBracketing,

    #[error("f' or f'' vanishes on the interval")]
    NotMonotonicConvex,

    #[error("iteration cap of {0} reached")]
    IterationLimitExceeded(usize),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unsupported exponent at {pos}: only non-negative integer powers are allowed")]
    UnsupportedExponent { pos: usize },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::UnsupportedExponent { .. } => 2,
            Error::IterationLimitExceeded(_) => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
