use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{Monomial, Rational};
use crate::error::{Error, Result};

/// Total degree of a polynomial. The zero polynomial has degree `MinusInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex monomials and never store a
/// zero coefficient, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(c.into()))
    }

    /// The variable `x_{index+1}` (zero-based index).
    pub fn variable(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable index {index} out of range for {nvars} variables"
        );
        Self::monomial(nvars, Monomial::variable(nvars, index), Rational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), nvars, "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Sums the given terms; repeated monomials are merged.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            Some(m) => Degree::Finite(m.degree()),
            None => Degree::MinusInfinity,
        }
    }

    /// Terms in canonical order: descending graded-lex.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled_shifted(&mut self, other: &Polynomial, c: &Rational, shift: &Monomial) {
        for (m, a) in &other.terms {
            self.add_term(m.mul(shift), a * c);
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = Polynomial::zero(self.nvars);
        // iterate over the shorter operand in the outer loop
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m, c) in &small.terms {
            out.add_scaled_shifted(large, c, m);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        if k == 0 {
            return Polynomial::one(self.nvars);
        }
        if self.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return Polynomial::monomial(
                self.nvars,
                m.pow(k),
                num_traits::pow(c.clone(), k as usize),
            );
        }
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.nvars);
        let mut e = k;
        loop {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = &base * &base;
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Runs multivariate division against graded-lex leading terms and
    /// fails with `NotDivisible` as soon as the leading term of the running
    /// remainder is not a monomial multiple of the divisor's leading term.
    /// If `self = q * divisor` exactly, every intermediate remainder is a
    /// multiple of `divisor`, so that failure is conclusive.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial> {
        check_arity(self.nvars, divisor.nvars)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if divisor.len() == 1 {
            let inv = lead_c.recip();
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.div(lead_m).ok_or(Error::NotDivisible)?;
                terms.insert(q, c * &inv);
            }
            return Ok(Polynomial {
                nvars: self.nvars,
                terms,
            });
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m).ok_or(Error::NotDivisible)?;
            let qc = c / lead_c;
            rem.add_scaled_shifted(divisor, &-&qc, &qm);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        check_arity(self.nvars, point.len())?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `x_i -> sign_i * x_{target_i}` for every variable.
    ///
    /// `target` must be a permutation of `0..nvars`; `negate[i]` selects the
    /// sign attached to the image of `x_i`.
    pub fn substitute_signed(&self, target: &[usize], negate: &[bool]) -> Polynomial {
        assert_eq!(target.len(), self.nvars);
        assert_eq!(negate.len(), self.nvars);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; self.nvars];
            let mut odd = false;
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[target[i]] += e;
                if negate[i] && e % 2 == 1 {
                    odd = !odd;
                }
            }
            let c = if odd { -c } else { c.clone() };
            terms.insert(Monomial::new(exps), c);
        }
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Exchanges the variables with zero-based indices `i` and `j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> Polynomial {
        let mut target: Vec<usize> = (0..self.nvars).collect();
        target.swap(i, j);
        self.substitute_signed(&target, &vec![false; self.nvars])
    }

    /// Re-embeds the polynomial into a ring with `nvars` variables,
    /// sending `x_i` to `x_{map[i]}`.
    pub fn relabel(&self, nvars: usize, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.nvars);
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; nvars];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::print(self, crate::expr::Alphabet::X))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i - 1)
    }

    fn int(n: usize, c: i64) -> Polynomial {
        Polynomial::from_int(n, c)
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn add_examples() {
        assert!((&x(2, 1) + &(-x(2, 1))).is_zero());
        let lhs = &(&x(2, 1) + &x(2, 2)) + &x(2, 2);
        let rhs = &x(2, 1) + &x(2, 2).scale(&q(2, 1));
        assert_eq!(lhs, rhs);
        let p = &(&x(2, 1) * &x(2, 2)) + &int(2, 3);
        assert_eq!(&p + &Polynomial::zero(2), p);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        assert_eq!(
            x(2, 1).try_add(&x(3, 1)),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(x(2, 1).try_mul(&x(3, 1)).is_err());
        assert!(x(2, 1).exact_divide(&x(3, 1)).is_err());
        assert!(x(2, 1).eval(&[q(1, 1)]).is_err());
    }

    #[test]
    fn mul_examples() {
        let d = &x(2, 1) - &x(2, 2);
        let s = &x(2, 1) + &x(2, 2);
        let expect = &x(2, 1).pow(2) - &x(2, 2).pow(2);
        assert_eq!(&d * &s, expect);
        assert_eq!(&d * &Polynomial::one(2), d);
    }

    #[test]
    fn vandermonde_three_has_six_terms() {
        let v = &(&(&x(3, 1) - &x(3, 2)) * &(&x(3, 1) - &x(3, 3))) * &(&x(3, 2) - &x(3, 3));
        assert_eq!(v.len(), 6);
        // x1^2 x2 - x1^2 x3 - x1 x2^2 + x1 x3^2 + x2^2 x3 - x2 x3^2
        let m = |e: [u32; 3]| Monomial::new(e.to_vec());
        let expect = Polynomial::from_terms(
            3,
            [
                (m([2, 1, 0]), q(1, 1)),
                (m([2, 0, 1]), q(-1, 1)),
                (m([1, 2, 0]), q(-1, 1)),
                (m([1, 0, 2]), q(1, 1)),
                (m([0, 2, 1]), q(1, 1)),
                (m([0, 1, 2]), q(-1, 1)),
            ],
        );
        assert_eq!(v, expect);
        let point = [q(1, 1), q(2, 1), q(3, 1)];
        assert_eq!(v.eval(&point).unwrap(), q(-2, 1));
    }

    #[test]
    fn exact_divide_examples() {
        let num = &x(2, 1).pow(2) - &x(2, 2).pow(2);
        let den = &x(2, 1) - &x(2, 2);
        assert_eq!(num.exact_divide(&den).unwrap(), &x(2, 1) + &x(2, 2));
        assert_eq!(x(2, 1).exact_divide(&x(2, 2)), Err(Error::NotDivisible));
        assert_eq!(
            x(2, 1).exact_divide(&Polynomial::zero(2)),
            Err(Error::DivisionByZero)
        );
        assert!(Polynomial::zero(2).exact_divide(&den).unwrap().is_zero());
        // remainder appears only after a few reduction steps
        let almost = &(&num * &den) + &int(2, 1);
        assert_eq!(almost.exact_divide(&den), Err(Error::NotDivisible));
    }

    #[test]
    fn eval_examples() {
        let s = &x(2, 1) + &x(2, 2);
        assert_eq!(s.eval(&[q(1, 1), q(2, 1)]).unwrap(), q(3, 1));
        assert_eq!(
            Polynomial::zero(2).eval(&[q(5, 3), q(-1, 7)]).unwrap(),
            q(0, 1)
        );
    }

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        assert_eq!(Polynomial::zero(3).degree(), Degree::MinusInfinity);
        assert_eq!(Polynomial::one(3).degree(), Degree::Finite(0));
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!((&x(2, 1) * &x(2, 2)).degree(), Degree::Finite(2));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let s = &(&x(2, 1) + &x(2, 2)) - &int(2, 2);
        let mut acc = Polynomial::one(2);
        for k in 0..6u32 {
            assert_eq!(s.pow(k), acc);
            acc = &acc * &s;
        }
        assert_eq!(
            x(2, 1).scale(&q(-2, 1)).pow(3),
            x(2, 1).pow(3).scale(&q(-8, 1))
        );
    }

    #[test]
    fn signed_substitution() {
        // x1 -> x2, x2 -> -x1
        let p = &(&x(2, 1) * &x(2, 2).pow(2)) + &x(2, 2);
        let s = p.substitute_signed(&[1, 0], &[false, true]);
        let expect = &(&x(2, 2) * &x(2, 1).pow(2)) - &x(2, 1);
        assert_eq!(s, expect);
        assert_eq!(
            p.swap_variables(0, 1),
            &(&x(2, 2) * &x(2, 1).pow(2)) + &x(2, 1)
        );
    }

    #[test]
    fn integrality() {
        assert!((&x(2, 1) + &int(2, 3)).is_integral());
        assert!(!x(2, 1).scale(&q(1, 2)).is_integral());
    }
}
