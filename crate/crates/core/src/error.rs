use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division leaves a nonzero remainder: {0}")]
    NonExactDivision(String),
    #[error("result has non-integral coefficients: {0}")]
    NonIntegralResult(String),
    #[error("polynomial is not symmetric in {0}")]
    NotSymmetric(String),
    #[error("elimination did not terminate within {0} steps")]
    NonTerminating(u64),
    #[error("alphabet for generator {generator} has {size} line variables, needs {needed}")]
    InsufficientAlphabet {
        generator: usize,
        size: usize,
        needed: usize,
    },
    #[error("syntax error at {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("operation needs depth {needed} for generator {generator}, table bound is {bound}")]
    DepthExceeded {
        generator: usize,
        needed: usize,
        bound: usize,
    },
    #[error("series window too small: {0}")]
    WindowTooSmall(String),
    #[error("H_r(t) failed the polynomiality check: {0}")]
    NonPolynomialH(String),
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cache i/o: {0}")]
    Cache(String),
}

impl Error {
    /// Stable machine-readable name, printed by the CLI on failure.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonExactDivision(_) => "NonExactDivision",
            Error::NonIntegralResult(_) => "NonIntegralResult",
            Error::NotSymmetric(_) => "NotSymmetric",
            Error::NonTerminating(_) => "NonTerminating",
            Error::InsufficientAlphabet { .. } => "InsufficientAlphabet",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::DepthExceeded { .. } => "DepthExceeded",
            Error::WindowTooSmall(_) => "WindowTooSmall",
            Error::NonPolynomialH(_) => "NonPolynomialH",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Cache(_) => "CacheError",
        }
    }
}
