use std::fmt;

use super::Polynomial;
use crate::error::{Error, Result};

/// A quotient of two polynomials, kept unreduced.
///
/// No gcd is ever taken; two fractions are equal when their
/// cross-products agree.
#[derive(Clone)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if numerator.nvars() != denominator.nvars() {
            return Err(Error::ArityMismatch {
                expected: numerator.nvars(),
                found: denominator.nvars(),
            });
        }
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction {
            numerator,
            denominator,
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let nvars = p.nvars();
        RationalFunction {
            numerator: p,
            denominator: Polynomial::one(nvars),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_polynomial(Polynomial::zero(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// `(a*d + c*b) / (b*d)`, unreduced.
    pub fn add(&self, other: &RationalFunction) -> Result<RationalFunction> {
        let ad = self.numerator.try_mul(&other.denominator)?;
        let cb = other.numerator.try_mul(&self.denominator)?;
        Ok(RationalFunction {
            numerator: &ad + &cb,
            denominator: &self.denominator * &other.denominator,
        })
    }

    /// Certifies that the fraction is a polynomial and returns it.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        self.numerator.exact_divide(&self.denominator)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.nvars() == other.nvars()
            && &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalFunction {}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}
