use thiserror::Error;

/// Errors raised by the algebraic and real-geometry routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation needs a non-constant polynomial")]
    ConstantPolynomial,
    #[error("operation undefined on zero input")]
    ZeroInput,
    #[error("invalid variable order: duplicate or empty name '{0}'")]
    InvalidVarOrder(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("inequation polynomial is not regular modulo the saturated ideal: {0}")]
    NonRegularInequation(String),
    #[error("border polynomial degree {measured} exceeds bound {bound}")]
    BoundViolation { measured: u64, bound: u64 },
    #[error("sign could not be decided within the refinement cap")]
    SignUndecidable,
    #[error("polynomial vanishes at the sample point")]
    ZeroAtSample,
    #[error("fingerprint candidates exhausted without separating the sign classes")]
    FingerprintExhausted,
    #[error("recursion depth {0} exceeded")]
    RecursionDepthExceeded(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
