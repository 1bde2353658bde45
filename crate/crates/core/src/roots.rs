//! Positive roots of the classical families as integer linear forms, and
//! the Euler-class denominators built from them.

use std::fmt;
use std::str::FromStr;

use crate::arith::{rational, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::weyl::{Composition, Family, GroupSpec};

/// Orientation of the linear factors in Euler denominators.
///
/// `Prop` uses each positive root as listed (`x_i - x_j`, `i < j`);
/// `Sym` uses its negative (`x_j - x_i`). The two differ by the global
/// sign `(-1)^(number of factors)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    #[default]
    Prop,
    Sym,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Prop => "prop",
            Convention::Sym => "sym",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prop" => Ok(Convention::Prop),
            "sym" => Ok(Convention::Sym),
            other => Err(Error::Unsupported(format!("convention `{other}`"))),
        }
    }
}

/// The linear form `sum coeffs[i] * u_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::Internal("the zero vector is not a root".into()));
        }
        Ok(Root { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn e_diff(n: usize, i: usize, j: usize, plus: bool) -> Root {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        coeffs[j] = if plus { 1 } else { -1 };
        Root { coeffs }
    }

    fn e_scaled(n: usize, i: usize, c: i64) -> Root {
        let mut coeffs = vec![0; n];
        coeffs[i] = c;
        Root { coeffs }
    }
}

/// The linear polynomial attached to a root.
pub fn root_to_linear(root: &Root) -> Polynomial {
    let n = root.coeffs.len();
    Polynomial::from_terms(
        n,
        root.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (Monomial::variable(n, i), rational(c))),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    pub spec: GroupSpec,
    pub positive: Vec<Root>,
}

impl RootSystemData {
    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }
}

/// `A: e_i - e_j`; `B: e_i +- e_j, e_i`; `C: e_i +- e_j, 2 e_i` (all `i < j`).
pub fn positive_roots(spec: &GroupSpec) -> RootSystemData {
    let n = spec.rank;
    let mut positive = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            positive.push(Root::e_diff(n, i, j, false));
        }
    }
    if spec.family.has_sign_changes() {
        for i in 0..n {
            for j in i + 1..n {
                positive.push(Root::e_diff(n, i, j, true));
            }
        }
        let scale = if spec.family == Family::C { 2 } else { 1 };
        positive.extend((0..n).map(|i| Root::e_scaled(n, i, scale)));
    }
    RootSystemData {
        spec: *spec,
        positive,
    }
}

/// Positive roots of the subgroup `H` named by `comp`.
///
/// Family A: the roots `e_i - e_j` with `i` and `j` in the same block.
/// Families B and C: empty for `(1,...,1)`, everything for `(n)`.
pub fn parabolic_positive_roots(spec: &GroupSpec, comp: &Composition) -> Result<RootSystemData> {
    comp.check(spec)?;
    let all = positive_roots(spec);
    if spec.family.has_sign_changes() {
        let positive = if comp.is_whole_in(spec) {
            all.positive
        } else {
            Vec::new()
        };
        return Ok(RootSystemData {
            spec: *spec,
            positive,
        });
    }
    let block = comp.block_of();
    let positive = all
        .positive
        .into_iter()
        .filter(|r| {
            let idx: Vec<usize> = (0..spec.rank).filter(|&i| r.coeffs[i] != 0).collect();
            block[idx[0]] == block[idx[1]]
        })
        .collect();
    Ok(RootSystemData {
        spec: *spec,
        positive,
    })
}

/// The roots of `delta` not in `parabolic`, in `delta`'s order.
pub fn complement(delta: &RootSystemData, parabolic: &RootSystemData) -> Result<Vec<Root>> {
    if parabolic
        .positive
        .iter()
        .any(|r| !delta.positive.contains(r))
    {
        return Err(Error::RootContainment);
    }
    Ok(delta
        .positive
        .iter()
        .filter(|r| !parabolic.positive.contains(r))
        .cloned()
        .collect())
}

/// The linear factors `c_1(S_alpha)` over `delta - parabolic`, oriented by
/// `convention`.
pub fn euler_factors(
    delta: &RootSystemData,
    parabolic: &RootSystemData,
    convention: Convention,
) -> Result<Vec<Polynomial>> {
    Ok(complement(delta, parabolic)?
        .iter()
        .map(|r| {
            let p = root_to_linear(r);
            match convention {
                Convention::Prop => p,
                Convention::Sym => -p,
            }
        })
        .collect())
}

/// Product of [`euler_factors`]; `1` for an empty complement.
pub fn euler_denominator(
    delta: &RootSystemData,
    parabolic: &RootSystemData,
    convention: Convention,
) -> Result<Polynomial> {
    let n = delta.spec.rank;
    Ok(euler_factors(delta, parabolic, convention)?
        .iter()
        .fold(Polynomial::one(n), |acc, f| &acc * f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i - 1)
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn roots(v: &[&[i64]]) -> Vec<Root> {
        v.iter().map(|c| Root::new(c.to_vec()).unwrap()).collect()
    }

    #[test]
    fn type_a_positive_roots() {
        let r = positive_roots(&GroupSpec::a(3));
        assert_eq!(r.positive, roots(&[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]));
        assert_eq!(
            positive_roots(&GroupSpec::a(2)).positive,
            roots(&[&[1, -1]])
        );
    }

    #[test]
    fn type_bc_positive_roots() {
        let c2 = positive_roots(&GroupSpec::new(Family::C, 2).unwrap());
        let mut got = c2.positive.clone();
        got.sort();
        let mut want = roots(&[&[1, -1], &[1, 1], &[2, 0], &[0, 2]]);
        want.sort();
        assert_eq!(got, want);
        for n in 1..=5 {
            assert_eq!(
                positive_roots(&GroupSpec::new(Family::B, n).unwrap()).len(),
                n * n
            );
            assert_eq!(
                positive_roots(&GroupSpec::new(Family::C, n).unwrap()).len(),
                n * n
            );
            assert_eq!(positive_roots(&GroupSpec::a(n)).len(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn parabolic_roots() {
        let a3 = GroupSpec::a(3);
        assert_eq!(
            parabolic_positive_roots(&a3, &comp(&[1, 2]))
                .unwrap()
                .positive,
            roots(&[&[0, 1, -1]])
        );
        assert!(
            parabolic_positive_roots(&GroupSpec::a(4), &Composition::trivial(4))
                .unwrap()
                .is_empty()
        );
        assert_eq!(
            parabolic_positive_roots(&GroupSpec::a(4), &comp(&[2, 2]))
                .unwrap()
                .positive,
            roots(&[&[1, -1, 0, 0], &[0, 0, 1, -1]])
        );
        let b3 = GroupSpec::new(Family::B, 3).unwrap();
        assert_eq!(
            parabolic_positive_roots(&b3, &Composition::whole(3))
                .unwrap()
                .len(),
            9
        );
        assert!(parabolic_positive_roots(&b3, &comp(&[2, 1])).is_err());
    }

    #[test]
    fn euler_denominator_examples() {
        let a3 = GroupSpec::a(3);
        let delta = positive_roots(&a3);
        let par = parabolic_positive_roots(&a3, &comp(&[1, 2])).unwrap();
        let d = euler_denominator(&delta, &par, Convention::Prop).unwrap();
        assert_eq!(d, &(&x(3, 1) - &x(3, 2)) * &(&x(3, 1) - &x(3, 3)));

        let a2 = GroupSpec::a(2);
        let d = euler_denominator(
            &positive_roots(&a2),
            &parabolic_positive_roots(&a2, &Composition::trivial(2)).unwrap(),
            Convention::Prop,
        )
        .unwrap();
        assert_eq!(d, &x(2, 1) - &x(2, 2));

        let par = parabolic_positive_roots(&a3, &Composition::whole(3)).unwrap();
        assert_eq!(
            euler_denominator(&delta, &par, Convention::Prop).unwrap(),
            Polynomial::one(3)
        );
    }

    #[test]
    fn containment_violation() {
        let delta = positive_roots(&GroupSpec::a(2));
        let bad = RootSystemData {
            spec: GroupSpec::a(2),
            positive: roots(&[&[-1, 1]]),
        };
        assert_eq!(
            euler_denominator(&delta, &bad, Convention::Prop),
            Err(Error::RootContainment)
        );
    }

    #[test]
    fn root_to_linear_examples() {
        assert_eq!(
            root_to_linear(&Root::new(vec![1, -1, 0]).unwrap()),
            &x(3, 1) - &x(3, 2)
        );
        assert_eq!(
            root_to_linear(&Root::new(vec![2, 0]).unwrap()),
            x(2, 1).scale(&rational(2))
        );
        assert_eq!(
            root_to_linear(&Root::new(vec![0, 0, 0, 1]).unwrap()),
            x(4, 4)
        );
        assert!(Root::new(vec![0, 0]).is_err());
    }

    #[test]
    fn complement_sizes_match_fiber_dimension() {
        for n in 2..=6 {
            let spec = GroupSpec::a(n);
            let delta = positive_roots(&spec);
            for k in 1..n {
                let par = parabolic_positive_roots(&spec, &Composition::grassmann(n, k).unwrap())
                    .unwrap();
                assert!(par.positive.iter().all(|r| delta.positive.contains(r)));
                let d = euler_denominator(&delta, &par, Convention::Prop).unwrap();
                assert_eq!(d.degree().finite(), Some((k * (n - k)) as u64));
                assert_eq!(complement(&delta, &par).unwrap().len(), k * (n - k));
                // the product over i <= k < j of (u_i - u_j), built directly
                if n <= 5 {
                    let mut direct = Polynomial::one(n);
                    for i in 1..=k {
                        for j in k + 1..=n {
                            direct = &direct * &(&x(n, i) - &x(n, j));
                        }
                    }
                    assert_eq!(d, direct);
                }
            }
            let par = parabolic_positive_roots(&spec, &Composition::trivial(n)).unwrap();
            assert_eq!(complement(&delta, &par).unwrap().len(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn sym_flips_sign_per_factor() {
        let spec = GroupSpec::a(3);
        let delta = positive_roots(&spec);
        let par = parabolic_positive_roots(&spec, &Composition::trivial(3)).unwrap();
        let p = euler_denominator(&delta, &par, Convention::Prop).unwrap();
        let s = euler_denominator(&delta, &par, Convention::Sym).unwrap();
        assert_eq!(s, -p);
    }
}
