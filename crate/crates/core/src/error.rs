use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,

    #[error("fraction does not reduce to a polynomial: {0}")]
    NotPolynomial(String),

    #[error("operation requires a nonzero polynomial")]
    EmptyPolynomial,

    #[error("lower parameter q^{exponent} makes the series denominator vanish at index {index}")]
    ZeroDenominator { exponent: i64, index: u64 },

    #[error("no upper parameter of the form q^-N with N >= 0, series does not terminate")]
    NonTerminating,

    #[error("need {needed} sample values, got {got}")]
    InsufficientValues { needed: usize, got: usize },

    #[error("coefficient {coeff} at q^{exponent} is negative")]
    NegativeCoefficient { exponent: i64, coeff: String },

    #[error("method {method} is not defined for the {family} family")]
    UnsupportedMethod { family: String, method: String },

    #[error("independent routes disagree: {0}")]
    RouteMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
