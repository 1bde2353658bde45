//! Exact arithmetic: rationals, sparse multivariate polynomials and an
//! unreduced fraction field over them.

mod fraction;
mod monomial;
mod polynomial;

pub use fraction::RationalFunction;
pub use monomial::Monomial;
pub use polynomial::{Degree, Polynomial};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
