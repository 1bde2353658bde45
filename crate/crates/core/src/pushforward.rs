//! Symmetrizing operators as fixed-point localization sums.
//!
//! For a fiber `G/H` the pushforward of a `W_H`-invariant class `b` is
//!
//! ```text
//! sum over w in W_G/W_H of  w . ( b / prod_{alpha in D+ - D+(H)} alpha )
//! ```
//!
//! Each coset representative `w` contributes a [`FixedPointDatum`] whose
//! restriction is `w . b` and whose Euler class is `w` applied to the
//! product of roots. The sum lives in the fraction field; it is brought to a
//! common denominator and certified to be a polynomial by exact division.
//!
//! For the full flag (`H = T`) the product of positive roots is
//! anti-invariant, `w . D = (-1)^w D`, so the sum also has the closed form
//! `(sum_w (-1)^w w . b) / D`, computed by [`pushforward_by_alternant`].

use std::collections::HashMap;

use num_traits::One;

use crate::arith::{Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::roots::{self, Convention};
use crate::weyl::{self, Composition, Family, GroupSpec, WeylElement, DEFAULT_CAP};

/// The fiber `G/H` of a flag-type bundle, plus evaluation options.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleSpec {
    pub group: GroupSpec,
    pub comp: Composition,
    pub convention: Convention,
    /// Reject inputs that are not `W_H`-invariant. When off, the operator
    /// is evaluated anyway and the output carries no invariance guarantee.
    pub enforce_invariance: bool,
    pub cap: usize,
}

impl BundleSpec {
    pub fn new(group: GroupSpec, comp: Composition, convention: Convention) -> Result<Self> {
        comp.check(&group)?;
        Ok(BundleSpec {
            group,
            comp,
            convention,
            enforce_invariance: true,
            cap: DEFAULT_CAP,
        })
    }

    /// Fiber `G/T`.
    pub fn full_flag(group: GroupSpec, convention: Convention) -> Self {
        let comp = Composition::trivial(group.rank);
        BundleSpec {
            group,
            comp,
            convention,
            enforce_invariance: true,
            cap: DEFAULT_CAP,
        }
    }

    /// Fiber the Grassmannian `G(k, n)`.
    pub fn grassmann(n: usize, k: usize, convention: Convention) -> Result<Self> {
        Self::new(
            GroupSpec::new(Family::A, n)?,
            Composition::grassmann(n, k)?,
            convention,
        )
    }

    pub fn allow_non_invariant(mut self) -> Self {
        self.enforce_invariance = false;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn rank(&self) -> usize {
        self.group.rank
    }

    /// Linear factors of the Euler class at the identity coset.
    pub fn euler_factors(&self) -> Result<Vec<Polynomial>> {
        let delta = roots::positive_roots(&self.group);
        let parabolic = roots::parabolic_positive_roots(&self.group, &self.comp)?;
        roots::euler_factors(&delta, &parabolic, self.convention)
    }

    /// `|D+ - D+(H)|`, the complex dimension of the fiber and the degree
    /// every pushforward drops by.
    pub fn relative_dimension(&self) -> Result<usize> {
        Ok(self.euler_factors()?.len())
    }

    fn check_arity(&self, b: &Polynomial) -> Result<()> {
        if b.nvars() != self.rank() {
            return Err(Error::ArityMismatch {
                expected: self.rank(),
                found: b.nvars(),
            });
        }
        Ok(())
    }

    fn check_input(&self, b: &Polynomial) -> Result<()> {
        self.check_arity(b)?;
        if self.enforce_invariance
            && !self.comp.is_trivial()
            && !weyl::is_invariant(b, &self.group, &self.comp)?
        {
            return Err(Error::NotInvariant);
        }
        Ok(())
    }
}

/// One term of a localization sum: `restriction / euler`, with the Euler
/// class kept as a list of factors whose product it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub restriction: Polynomial,
    euler_factors: Vec<Polynomial>,
}

impl FixedPointDatum {
    pub fn new(restriction: Polynomial, euler: Polynomial) -> Result<Self> {
        Self::factored(restriction, vec![euler])
    }

    pub fn factored(restriction: Polynomial, euler_factors: Vec<Polynomial>) -> Result<Self> {
        for f in &euler_factors {
            if f.is_zero() {
                return Err(Error::ZeroEuler);
            }
            if f.nvars() != restriction.nvars() {
                return Err(Error::ArityMismatch {
                    expected: restriction.nvars(),
                    found: f.nvars(),
                });
            }
        }
        Ok(FixedPointDatum {
            restriction,
            euler_factors,
        })
    }

    pub fn euler_factors(&self) -> &[Polynomial] {
        &self.euler_factors
    }

    pub fn euler(&self) -> Polynomial {
        let n = self.restriction.nvars();
        self.euler_factors
            .iter()
            .fold(Polynomial::one(n), |acc, f| &acc * f)
    }

    pub fn as_fraction(&self) -> RationalFunction {
        RationalFunction::new(self.restriction.clone(), self.euler()).expect("nonzero Euler class")
    }
}

/// The restriction `i_w^* j^* b = w . b` at the fixed point `w`.
pub fn restriction_at(w: &WeylElement, b: &Polynomial, bundle: &BundleSpec) -> Result<Polynomial> {
    bundle.check_input(b)?;
    w.act(b)
}

/// The equivariant Euler class `w . prod(alpha)` at the fixed point `w`.
pub fn euler_at(w: &WeylElement, bundle: &BundleSpec) -> Result<Polynomial> {
    let d = bundle
        .euler_factors()?
        .iter()
        .fold(Polynomial::one(bundle.rank()), |acc, f| &acc * f);
    w.act(&d)
}

/// Fixed-point data of `b`, one datum per coset representative.
pub fn fixed_point_data(b: &Polynomial, bundle: &BundleSpec) -> Result<Vec<FixedPointDatum>> {
    bundle.check_input(b)?;
    let factors = bundle.euler_factors()?;
    let reps = weyl::coset_reps_with_cap(&bundle.group, &bundle.comp, bundle.cap)?;
    reps.iter()
        .map(|w| {
            let moved = factors
                .iter()
                .map(|f| w.act(f))
                .collect::<Result<Vec<_>>>()?;
            FixedPointDatum::factored(w.act(b)?, moved)
        })
        .collect()
}

// Scales `f` to leading coefficient one, returning the scale factor.
fn normalize(f: &Polynomial) -> (Polynomial, Rational) {
    let lc = f
        .leading_term()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rational::one);
    (f.scale(&lc.recip()), lc)
}

/// The localization sum as a single fraction.
///
/// Euler factors are grouped up to scalar multiples; the common
/// denominator takes each group to the highest power any datum needs.
/// Since no datum's denominator is discarded this equals the plain
/// fraction sum, without the degree blow-up of multiplying all
/// denominators together.
pub fn localization_fraction(data: &[FixedPointDatum]) -> Result<RationalFunction> {
    let nvars = match data.first() {
        Some(d) => d.restriction.nvars(),
        None => return Err(Error::Internal("empty fixed-point data".into())),
    };
    let mut classes: Vec<Polynomial> = Vec::new();
    let mut index: HashMap<Polynomial, usize> = HashMap::new();
    let mut per_datum = Vec::with_capacity(data.len());
    for d in data {
        if d.restriction.nvars() != nvars {
            return Err(Error::ArityMismatch {
                expected: nvars,
                found: d.restriction.nvars(),
            });
        }
        let mut scale = Rational::one();
        let mut mult: HashMap<usize, usize> = HashMap::new();
        for f in &d.euler_factors {
            let (monic, lc) = normalize(f);
            scale *= lc;
            let next = classes.len();
            let id = *index.entry(monic.clone()).or_insert(next);
            if id == next {
                classes.push(monic);
            }
            *mult.entry(id).or_default() += 1;
        }
        per_datum.push((scale, mult));
    }
    let mut max_mult = vec![0usize; classes.len()];
    for (_, mult) in &per_datum {
        for (&id, &m) in mult {
            max_mult[id] = max_mult[id].max(m);
        }
    }
    let mut common = Polynomial::one(nvars);
    for (c, &m) in classes.iter().zip(&max_mult) {
        common = &common * &c.pow(m as u32);
    }
    let mut numerator = Polynomial::zero(nvars);
    for (d, (scale, mult)) in data.iter().zip(&per_datum) {
        if d.restriction.is_zero() {
            continue;
        }
        let mut term = d.restriction.scale(&scale.recip());
        for (id, c) in classes.iter().enumerate() {
            let missing = max_mult[id] - mult.get(&id).copied().unwrap_or(0);
            if missing > 0 {
                term = &term * &c.pow(missing as u32);
            }
        }
        numerator += &term;
    }
    RationalFunction::new(numerator, common)
}

/// `sum restriction / euler`, certified polynomial.
pub fn localization_sum(data: &[FixedPointDatum]) -> Result<Polynomial> {
    localization_fraction(data)?.to_polynomial()
}

/// The pushforward as a sum of fractions over the fixed points.
pub fn pushforward_by_localization(b: &Polynomial, bundle: &BundleSpec) -> Result<Polynomial> {
    bundle.check_input(b)?;
    if b.is_zero() {
        return Ok(Polynomial::zero(bundle.rank()));
    }
    localization_sum(&fixed_point_data(b, bundle)?)
}

/// `(sum_w (-1)^w w . b) / prod(alpha)` over the whole Weyl group.
///
/// Only defined for the full flag, where the Euler class is anti-invariant.
pub fn pushforward_by_alternant(b: &Polynomial, bundle: &BundleSpec) -> Result<Polynomial> {
    bundle.check_arity(b)?;
    if !bundle.comp.is_trivial() {
        return Err(Error::Unsupported(
            "the closed alternant form needs the full flag".into(),
        ));
    }
    if b.is_zero() {
        return Ok(Polynomial::zero(bundle.rank()));
    }
    let n = bundle.rank();
    let mut alternant = Polynomial::zero(n);
    for w in weyl::enumerate_with_cap(&bundle.group, bundle.cap)? {
        let moved = w.act(b)?;
        if w.sign() > 0 {
            alternant += &moved;
        } else {
            alternant -= &moved;
        }
    }
    let denominator = bundle
        .euler_factors()?
        .iter()
        .fold(Polynomial::one(n), |acc, f| &acc * f);
    alternant.exact_divide(&denominator)
}

fn certify_output(out: &Polynomial, bundle: &BundleSpec) -> Result<()> {
    if bundle.enforce_invariance && !weyl::is_weyl_invariant(out, &bundle.group)? {
        return Err(Error::Internal(format!(
            "pushforward {out} is not Weyl-invariant"
        )));
    }
    Ok(())
}

/// `f^* f_*` of the fiber class `b`.
///
/// The full flag goes through the alternant form, other fibers through the
/// localization sum. The result is checked to be `W_G`-invariant unless
/// invariance enforcement is off.
pub fn gysin_pushforward(b: &Polynomial, bundle: &BundleSpec) -> Result<Polynomial> {
    bundle.check_input(b)?;
    let out = if bundle.comp.is_trivial() {
        pushforward_by_alternant(b, bundle)?
    } else {
        pushforward_by_localization(b, bundle)?
    };
    certify_output(&out, bundle)?;
    Ok(out)
}

/// The Jacobi symmetrizer on `n` variables: the complete flag bundle of a
/// rank-`n` vector bundle.
pub fn jacobi_symmetrize(b: &Polynomial, n: usize, convention: Convention) -> Result<Polynomial> {
    gysin_pushforward(
        b,
        &BundleSpec::full_flag(GroupSpec::new(Family::A, n)?, convention),
    )
}

/// [`jacobi_symmetrize`] evaluated by both the localization sum and the
/// alternant form; errors if they differ.
pub fn jacobi_symmetrize_certified(
    b: &Polynomial,
    n: usize,
    convention: Convention,
) -> Result<Polynomial> {
    let bundle = BundleSpec::full_flag(GroupSpec::new(Family::A, n)?, convention);
    let by_alternant = gysin_pushforward(b, &bundle)?;
    let by_fractions = pushforward_by_localization(b, &bundle)?;
    if by_alternant != by_fractions {
        return Err(Error::Internal(format!(
            "alternant form {by_alternant} differs from localization sum {by_fractions}"
        )));
    }
    Ok(by_alternant)
}

/// The Borel-Hirzebruch pushforward `BT -> BG`:
/// `(sum_w (-1)^w w . x) / (a_1 ... a_m)` over the positive roots of `group`.
pub fn borel_hirzebruch(
    x: &Polynomial,
    group: GroupSpec,
    convention: Convention,
) -> Result<Polynomial> {
    let bundle = BundleSpec::full_flag(group, convention);
    let out = pushforward_by_alternant(x, &bundle)?;
    certify_output(&out, &bundle)?;
    Ok(out)
}

/// The Lagrange-Sylvester symmetrizer: the Grassmann bundle `G(k, V)` of a
/// rank-`n` bundle. `b` must be `S_k x S_{n-k}`-invariant.
pub fn lagrange_sylvester(
    b: &Polynomial,
    n: usize,
    k: usize,
    convention: Convention,
) -> Result<Polynomial> {
    gysin_pushforward(b, &BundleSpec::grassmann(n, k, convention)?)
}

/// The generalized symmetrizer `W_H`-invariants to `W_G`-invariants,
/// always evaluated as the coset sum of fractions.
pub fn box_operator(b: &Polynomial, bundle: &BundleSpec) -> Result<Polynomial> {
    let out = pushforward_by_localization(b, bundle)?;
    certify_output(&out, bundle)?;
    Ok(out)
}

/// The Jacobi symmetrizer applied inside each block of `comp` separately:
/// the pushforward along the fiber `H/T` of `Fl(V) -> G/H`.
pub fn block_jacobi(
    b: &Polynomial,
    comp: &Composition,
    convention: Convention,
) -> Result<Polynomial> {
    let group = GroupSpec::new(Family::A, comp.rank())?;
    comp.check(&group)?;
    if b.nvars() != group.rank {
        return Err(Error::ArityMismatch {
            expected: group.rank,
            found: b.nvars(),
        });
    }
    if b.is_zero() {
        return Ok(b.clone());
    }
    let mut alternant = Polynomial::zero(group.rank);
    for u in weyl::parabolic_elements(&group, comp, DEFAULT_CAP)? {
        let moved = u.act(b)?;
        if u.sign() > 0 {
            alternant += &moved;
        } else {
            alternant -= &moved;
        }
    }
    let parabolic = roots::parabolic_positive_roots(&group, comp)?;
    let none = roots::RootSystemData {
        spec: group,
        positive: Vec::new(),
    };
    let denominator = roots::euler_denominator(&parabolic, &none, convention)?;
    alternant.exact_divide(&denominator)
}

/// The full-flag pushforward factored through the Grassmann bundle:
/// block Jacobi on `(k, n-k)` followed by Lagrange-Sylvester.
pub fn pushforward_via_factorization(b: &Polynomial, n: usize, k: usize) -> Result<Polynomial> {
    let comp = Composition::grassmann(n, k)?;
    let partial = block_jacobi(b, &comp, Convention::Prop)?;
    lagrange_sylvester(&partial, n, k, Convention::Prop)
}
