use core::fmt;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// Malformed rational literal; `position` is the byte offset of the offending character.
    Parse { position: usize, reason: &'static str },
    ZeroPolynomial,
    ConstantPolynomial,
    /// A Sturm count endpoint is itself a root of the chain head.
    EndpointIsRoot,
    /// Interval bounds are not strictly increasing.
    InvalidInterval,
    /// Refinement tolerances must be strictly positive.
    NonPositiveTolerance,
    InvalidLength,
    GeometricRootAnomaly { count: usize },
    UnsupportedCoefficients,
    NotPrimitive,
    UnsupportedDegree(usize),
    RootMismatch,
    DegenerateFamily,
    DegenerateTriangle,
    PrecisionExceeded,
    /// Two independent computations of the same quantity disagreed.
    IdentityMismatch(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::Parse { position, reason } => {
                write!(f, "parse error at position {position}: {reason}")
            }
            Error::ZeroPolynomial => f.write_str("operation undefined for the zero polynomial"),
            Error::ConstantPolynomial => f.write_str("operation undefined for a constant polynomial"),
            Error::EndpointIsRoot => f.write_str("interval endpoint is a root"),
            Error::NonPositiveTolerance => f.write_str("tolerance must be positive"),
            Error::InvalidInterval => f.write_str("interval lower bound must be below upper bound"),
            Error::InvalidLength => f.write_str("lengths must be strictly positive"),
            Error::GeometricRootAnomaly { count } => {
                write!(f, "expected exactly one root above 1/2, found {count}")
            }
            Error::UnsupportedCoefficients => f.write_str(
                "leading and constant coefficients must be nonzero constants in q",
            ),
            Error::NotPrimitive => f.write_str("polynomial is not primitive over Q[q]"),
            Error::UnsupportedDegree(d) => write!(f, "degree {d} is outside the supported range 2..=3"),
            Error::RootMismatch => f.write_str("isolating interval does not bracket a root of the polynomial"),
            Error::DegenerateFamily => f.write_str("family parameter must satisfy 0 < s and s^2 < 2"),
            Error::DegenerateTriangle => f.write_str("sides violate 2l > b > 0"),
            Error::PrecisionExceeded => f.write_str("requested precision could not be certified"),
            Error::IdentityMismatch(what) => write!(f, "independent computations disagree: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
