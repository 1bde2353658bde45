use std::cmp::Ordering;

/// A monomial `x1^e1 * ... * xn^en` of fixed arity.
///
/// Ordered graded-lexicographically with `x1 > x2 > ... > xn`: higher total
/// degree first, then the first differing exponent decides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u64,
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().map(|&e| e as u64).sum();
        Monomial { degree, exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exponents: vec![0; nvars],
        }
    }

    /// The monomial `x_index` (zero-based index).
    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Monomial {
            degree: 1,
            exponents,
        }
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exponents,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exponents = Vec::with_capacity(self.nvars());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            exponents.push(a.checked_sub(*b)?);
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            exponents,
        })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exponents = self
            .exponents
            .iter()
            .map(|e| e.checked_mul(k).expect("exponent overflow"))
            .collect();
        Monomial {
            degree: self.degree * k as u64,
            exponents,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x1 = Monomial::new(vec![1, 0]);
        let x2 = Monomial::new(vec![0, 1]);
        let x2sq = Monomial::new(vec![0, 2]);
        let x1x2 = Monomial::new(vec![1, 1]);
        assert!(x1 > x2);
        assert!(x2sq > x1);
        assert!(x1x2 > x2sq);
        assert!(Monomial::one(2) < x2);
    }

    #[test]
    fn division() {
        let a = Monomial::new(vec![2, 1, 0]);
        let b = Monomial::new(vec![1, 1, 0]);
        assert_eq!(a.div(&b), Some(Monomial::new(vec![1, 0, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.div(&Monomial::one(3)), Some(a.clone()));
    }
}
