use thiserror::Error;

/// Errors raised by ring construction, element arithmetic, series and character evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is too small (p must be at least 5)")]
    PrimeTooSmall(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("not an Eisenstein polynomial: coefficient {index} {reason}")]
    NotEisenstein { index: usize, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("valuation below precision floor (element is zero to precision O(pi^{prec}))")]
    BelowPrecisionFloor { prec: i64 },

    #[error("precision underflow: need {needed} pi-units, have {available}")]
    PrecisionUnderflow { needed: i64, available: i64 },

    #[error("element is not a unit")]
    NotUnit,

    #[error("element is not in the maximal ideal")]
    NotInMaximalIdeal,

    #[error("element is not congruent to 1 modulo pi")]
    NotOneModPi,

    #[error("operation requires an element of R_pi (shift 0), got shift {0}")]
    ShiftedElement(u32),

    #[error("truncation overflow: a nonzero term of degree {degree} exceeds the bound {trunc}")]
    TruncationOverflow { degree: u32, trunc: u32 },

    #[error("incompatible series: {0}")]
    IncompatibleSeries(String),

    #[error("m = {m} does not divide w(p) = {wp}")]
    IndivisibleWord { m: i64, wp: String },

    #[error("m = {0} is divisible by p")]
    DenominatorDivisibleByP(i64),

    #[error("curve y^2 = x^3 + {a4}x + {a6} has bad reduction at p = {p}")]
    SingularCurve { a4: String, a6: String, p: u64 },

    #[error("supersingular curve has no order-1 delta-character in this setting")]
    Supersingular,

    #[error("corrupted group law: n*A_n is not p-integral at n = {n}")]
    CorruptedGroupLaw { n: usize },

    #[error("point lies outside the ordinary domain: inner logarithm vanishes")]
    OutsideOrdinaryDomain,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
