//! Exact Laurent polynomials in `q` over the integers and their fraction field.

mod dense;
mod format;
mod fraction;
mod laurent;

pub use fraction::QFraction;
pub use laurent::{is_unimodal, CoefficientProfile, LaurentPoly};

pub(crate) use laurent::{add_exp, mul_exp};
