//! Classical symmetric-function oracles: bialternant Schur polynomials,
//! complete homogeneous polynomials and divided differences. None of these
//! go through the Weyl group or root machinery, so they check the
//! symmetrizers independently.

use serde::Serialize;

use crate::arith::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::expr::{print, Alphabet};
use crate::pushforward::lagrange_sylvester;
use crate::roots::Convention;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `lambda_i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// All partitions of `size` with at most `max_len` parts, largest
    /// first part first.
    pub fn all_of_size(size: usize, max_len: usize) -> Vec<Partition> {
        fn go(
            rest: usize,
            max_part: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }
}

// Determinant by cofactor expansion along rows, memoised on the set of
// columns already used.
fn determinant(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = m.len();
    let mut memo: Vec<Option<Polynomial>> = vec![None; 1 << n];
    fn minor(
        m: &[Vec<Polynomial>],
        row: usize,
        used: usize,
        nvars: usize,
        memo: &mut Vec<Option<Polynomial>>,
    ) -> Polynomial {
        let n = m.len();
        if row == n {
            return Polynomial::one(nvars);
        }
        if let Some(p) = &memo[used] {
            return p.clone();
        }
        let mut acc = Polynomial::zero(nvars);
        let mut free_seen = 0;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            if !m[row][col].is_zero() {
                let sub = minor(m, row + 1, used | (1 << col), nvars, memo);
                let term = &m[row][col] * &sub;
                if free_seen % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            free_seen += 1;
        }
        memo[used] = Some(acc.clone());
        acc
    }
    minor(m, 0, 0, nvars, &mut memo)
}

fn x_power(n: usize, i: usize, e: usize) -> Polynomial {
    let mut exps = vec![0u32; n];
    exps[i] = e as u32;
    Polynomial::monomial(n, Monomial::new(exps), Rational::from_integer(1.into()))
}

/// `det(x_i^{lambda_j + n - j}) / det(x_i^{n - j})`.
pub fn schur_bialternant(lambda: &Partition, n: usize) -> Result<Polynomial> {
    if lambda.len() > n {
        return Err(Error::MalformedPartition(format!(
            "{:?} has more than {n} parts",
            lambda.parts()
        )));
    }
    let alternant = |shift: &dyn Fn(usize) -> usize| -> Vec<Vec<Polynomial>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| x_power(n, i, shift(j) + n - 1 - j))
                    .collect()
            })
            .collect()
    };
    let num = determinant(&alternant(&|j| lambda.part(j)), n);
    let den = determinant(&alternant(&|_| 0), n);
    num.exact_divide(&den)
        .map_err(|_| Error::Internal("bialternant is not divisible by the Vandermonde".into()))
}

/// `h_k(x_1, ..., x_n)`: every monomial of degree `k` with coefficient 1.
pub fn complete_homogeneous(k: usize, n: usize) -> Polynomial {
    fn go(i: usize, rest: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = rest;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=rest {
            exps[i] = e;
            go(i + 1, rest - e, exps, out);
        }
    }
    let mut monomials = Vec::new();
    go(0, k as u32, &mut vec![0; n], &mut monomials);
    let one = Rational::from_integer(1.into());
    Polynomial::from_terms(n, monomials.into_iter().map(|m| (m, one.clone())))
}

/// `e_k(x_1, ..., x_n)`.
pub fn elementary_symmetric(k: usize, n: usize) -> Polynomial {
    let mut e = vec![Polynomial::one(n)];
    e.extend((0..k).map(|_| Polynomial::zero(n)));
    for i in 0..n {
        let xi = Polynomial::variable(n, i);
        for j in (1..=k).rev() {
            let t = &e[j - 1] * &xi;
            e[j] += &t;
        }
    }
    e.swap_remove(k)
}

/// `(b - s_i b) / (x_i - x_{i+1})` with `i` one-based.
pub fn divided_difference(i: usize, b: &Polynomial) -> Result<Polynomial> {
    let n = b.nvars();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let numerator = b - &b.swap_variables(i - 1, i);
    let denominator = &Polynomial::variable(n, i - 1) - &Polynomial::variable(n, i);
    numerator
        .exact_divide(&denominator)
        .map_err(|_| Error::Internal("divided difference numerator not divisible".into()))
}

/// The reduced word `(s1)(s2 s1)(s3 s2 s1)...` of the longest permutation.
pub fn longest_word(n: usize) -> Vec<usize> {
    let mut word = Vec::new();
    for top in 1..n {
        word.extend((1..=top).rev());
    }
    word
}

/// `d_{w0} b`, composing divided differences along [`longest_word`].
pub fn jacobi_via_divided_differences(b: &Polynomial, n: usize) -> Result<Polynomial> {
    if b.nvars() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: b.nvars(),
        });
    }
    let mut out = b.clone();
    // operators compose right to left
    for &i in longest_word(n).iter().rev() {
        if out.is_zero() {
            break;
        }
        out = divided_difference(i, &out)?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegreRow {
    pub j: usize,
    pub input: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegreReport {
    pub n: usize,
    pub rows: Vec<SegreRow>,
}

impl SegreReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }
}

/// Checks that the projective-bundle pushforward of `x1^{n-1+j}` is `h_j`
/// for `j = 0..=jmax`. Failures are recorded, not raised.
pub fn segre_check(n: usize, jmax: usize) -> Result<SegreReport> {
    if n < 2 {
        return Err(Error::Unsupported("the Segre check needs n >= 2".into()));
    }
    let mut rows = Vec::new();
    for j in 0..=jmax {
        let input = x_power(n, 0, n - 1 + j);
        let expected = complete_homogeneous(j, n);
        let (computed, passed) = match lagrange_sylvester(&input, n, 1, Convention::Prop) {
            Ok(c) => {
                let ok = c == expected;
                (print(&c, Alphabet::X), ok)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        rows.push(SegreRow {
            j,
            input: print(&input, Alphabet::X),
            expected: print(&expected, Alphabet::X),
            computed,
            passed,
        });
    }
    Ok(SegreReport { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn p(src: &str, n: usize) -> Polynomial {
        parse(src, n).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert_eq!(Partition::all_of_size(4, 4).len(), 5);
        assert_eq!(Partition::all_of_size(4, 2).len(), 3);
        assert_eq!(Partition::all_of_size(0, 3), vec![part(&[])]);
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_bialternant(&part(&[1]), 2).unwrap(), p("x1 + x2", 2));
        assert_eq!(schur_bialternant(&part(&[1, 1]), 2).unwrap(), p("x1*x2", 2));
        assert_eq!(
            schur_bialternant(&part(&[2]), 2).unwrap(),
            p("x1^2 + x1*x2 + x2^2", 2)
        );
        assert_eq!(
            schur_bialternant(&part(&[]), 3).unwrap(),
            Polynomial::one(3)
        );
        assert!(schur_bialternant(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_row_and_column_shapes() {
        for n in 1..=4 {
            for k in 0..=4 {
                assert_eq!(
                    schur_bialternant(&part(&[k]), n).unwrap(),
                    complete_homogeneous(k, n)
                );
                if k <= n {
                    let column = vec![1; k];
                    assert_eq!(
                        schur_bialternant(&part(&column), n).unwrap(),
                        elementary_symmetric(k, n)
                    );
                }
            }
        }
    }

    #[test]
    fn vandermonde_is_product_of_differences() {
        let v = determinant(
            &(0..3)
                .map(|i| (0..3).map(|j| x_power(3, i, 2 - j)).collect())
                .collect::<Vec<_>>(),
            3,
        );
        assert_eq!(v, p("(x1-x2)*(x1-x3)*(x2-x3)", 3));
    }

    #[test]
    fn complete_homogeneous_examples() {
        assert_eq!(complete_homogeneous(0, 4), Polynomial::one(4));
        assert_eq!(complete_homogeneous(1, 3), p("x1 + x2 + x3", 3));
        assert_eq!(complete_homogeneous(2, 2), p("x1^2 + x1*x2 + x2^2", 2));
        // C(k + n - 1, n - 1) monomials
        assert_eq!(complete_homogeneous(4, 3).len(), 15);
    }

    #[test]
    fn complete_homogeneous_is_symmetric() {
        let h = complete_homogeneous(3, 4);
        for i in 0..3 {
            assert_eq!(h.swap_variables(i, i + 1), h);
        }
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(
            divided_difference(1, &p("x1^2", 2)).unwrap(),
            p("x1 + x2", 2)
        );
        assert!(divided_difference(1, &p("x1 + x2", 2)).unwrap().is_zero());
        assert_eq!(
            divided_difference(1, &p("x1", 2)).unwrap(),
            Polynomial::one(2)
        );
        assert!(matches!(
            divided_difference(2, &p("x1", 2)),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            divided_difference(0, &p("x1", 2)),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn divided_difference_squares_to_zero() {
        let b = p("x1^3*x2 - 2*x2^2*x3 + 5*x1*x3^4", 3);
        for i in 1..3 {
            let once = divided_difference(i, &b).unwrap();
            assert!(divided_difference(i, &once).unwrap().is_zero());
        }
    }

    #[test]
    fn longest_word_shape() {
        assert_eq!(longest_word(2), vec![1]);
        assert_eq!(longest_word(3), vec![1, 2, 1]);
        assert_eq!(longest_word(4), vec![1, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn jacobi_by_divided_differences_examples() {
        assert_eq!(
            jacobi_via_divided_differences(&p("x1^2", 2), 2).unwrap(),
            p("x1 + x2", 2)
        );
        assert!(jacobi_via_divided_differences(&Polynomial::one(3), 3)
            .unwrap()
            .is_zero());
        assert_eq!(
            jacobi_via_divided_differences(&p("x1^2*x2", 3), 3).unwrap(),
            Polynomial::one(3)
        );
    }

    #[test]
    fn segre_examples() {
        let r = segre_check(3, 1).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.rows[0].computed, "1");
        assert_eq!(r.rows[1].computed, "x1 + x2 + x3");
        let r = segre_check(2, 2).unwrap();
        assert_eq!(r.rows[2].input, "x1^3");
        assert_eq!(r.rows[2].computed, "x1^2 + x1*x2 + x2^2");
        assert!(segre_check(1, 2).is_err());
    }
}
