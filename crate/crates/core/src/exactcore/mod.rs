//! Exact arithmetic substrate: arbitrary-precision rationals, multivariate
//! polynomials, rational functions, truncated bivariate power series and
//! exact linear algebra over the rationals and the rational-function field.
//!
//! Everything here is immutable after construction and panics never; all
//! fallible operations return [`ExactError`].

mod poly;
mod ratfunc;
mod series;
pub mod linalg;

pub use poly::MultiPoly;
pub use ratfunc::RationalFunction;
pub use series::BiSeries;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar.  `num_rational` keeps the invariants we need:
/// reduced fraction, positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero polynomial")]
    ZeroDenominator,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unbound variable `{0}` in substitution")]
    UnboundVariable(String),
    #[error("substitution produced an identically zero denominator")]
    SubstitutionPole,
    #[error("inexact division")]
    InexactDivision,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is degenerate")]
    Degenerate,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type ExactResult<T> = Result<T, ExactError>;
