//! Exact arithmetic in `Z[q, q^-1]` and identity checks for two families of
//! generalized q-binomial coefficients.

pub mod cli;
pub mod error;
pub mod genfun;
pub mod lassalle;
pub mod linearize;
pub mod qbasic;
pub mod qpoly;
pub mod report;

pub use error::{Error, Result};
pub use qpoly::{LaurentPoly, QFraction};
