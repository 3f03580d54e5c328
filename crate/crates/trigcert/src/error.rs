use thiserror::Error;

/// Errors raised by the validated-arithmetic and evaluation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Interval division where the divisor encloses zero.
    #[error("division by an interval containing zero")]
    DivisionByZero,
    /// A cos enclosure containing zero makes tan unevaluable; the caller
    /// must shrink the interval or raise the precision.
    #[error("tan evaluation too close to pi/2 at this precision")]
    NearSingularity,
    /// Series division by the zero series.
    #[error("power series division by the zero series")]
    ZeroSeriesDivision,
    /// Series division where the divisor valuation exceeds the dividend's.
    #[error("power series division with divisor valuation {divisor} > dividend valuation {dividend}")]
    ValuationMismatch { divisor: usize, dividend: usize },
    /// Tail bounds only exist on radii certified to lie inside (0, pi/2).
    #[error("tail-bound radius {0} too large (must be <= 3/2)")]
    RadiusTooLarge(String),
    /// A catalog lookup failed.
    #[error("unknown case id `{0}`")]
    UnknownCase(String),
    /// A parameterised case was invoked outside its declared index range.
    #[error("parameter n={n} outside declared range {lo}..={hi} for case `{case}`")]
    ParamOutOfRange { case: String, n: u32, lo: u32, hi: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
