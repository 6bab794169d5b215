use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A coefficient or argument was NaN or infinite.
    NonFinite { what: &'static str, value: f64 },
    /// Leading coefficient `a4` of a non-monic input is zero.
    ZeroLeadingCoefficient,
    /// The trigonometric reduction needs `m < 0`.
    NotReducible { m: f64 },
    /// Angle outside `[0, pi]`.
    OutOfDomain { theta: f64 },
    /// An operation was called on input belonging to another classification path.
    WrongPath(&'static str),
    /// Counting interval with `lo >= hi`.
    InvalidInterval { lo: f64, hi: f64 },
    /// A bisection bracket did not straddle a sign change.
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    /// A monotone segment of positive width on which `f` appears constant.
    ConstantSegment { lo: f64, hi: f64 },
    /// The iterative all-roots solver did not converge even after the fallback.
    OracleFailure(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonFinite { what, value } => write!(f, "non-finite {what}: {value}"),
            Self::ZeroLeadingCoefficient => write!(f, "leading coefficient a4 must be nonzero"),
            Self::NotReducible { m } => {
                write!(f, "trigonometric reduction requires m < 0 (got m = {m})")
            }
            Self::OutOfDomain { theta } => write!(f, "theta = {theta} is outside [0, pi]"),
            Self::WrongPath(msg) => write!(f, "wrong classification path: {msg}"),
            Self::InvalidInterval { lo, hi } => write!(f, "empty interval ({lo}, {hi}]"),
            Self::InvalidBracket { lo, hi, f_lo, f_hi } => write!(
                f,
                "bracket [{lo}, {hi}] does not straddle a sign change (f = {f_lo}, {f_hi})"
            ),
            Self::ConstantSegment { lo, hi } => {
                write!(f, "internal error: f is constant on [{lo}, {hi}]")
            }
            Self::OracleFailure(msg) => write!(f, "oracle failure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
