//! The verification suite: operator identities checked against the
//! classical oracles over a seeded random corpus.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{ratio, Monomial, Polynomial, Rational};
use crate::error::Result;
use crate::expr::{self, Alphabet, ParseErrorKind};
use crate::pushforward::{
    borel_hirzebruch, box_operator, jacobi_symmetrize, lagrange_sylvester,
    pushforward_by_alternant, pushforward_by_localization, pushforward_via_factorization,
    BundleSpec,
};
use crate::roots::Convention;
use crate::schubert::{
    complete_homogeneous, jacobi_via_divided_differences, schur_bialternant, Partition,
};
use crate::weyl::{self, Composition, Family, GroupSpec, DEFAULT_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest rank of the random corpus. Segre and Weyl-count checks run
    /// two ranks higher, functoriality one higher.
    pub max_n: usize,
    pub max_degree: usize,
    pub convention: Convention,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 4,
            max_degree: 6,
            convention: Convention::Prop,
            samples: 100,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, failures: &[String], summary: String) -> Self {
        let detail = match failures.first() {
            None => summary,
            Some(first) => format!("{} failure(s); first: {first}", failures.len()),
        };
        CheckResult {
            name: name.into(),
            passed: failures.is_empty(),
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

// ---------------------------------------------------------------------------
// random corpus

fn random_coefficient(rng: &mut impl Rng) -> Rational {
    let num = loop {
        let c = rng.gen_range(-5i64..=5);
        if c != 0 {
            break c;
        }
    };
    let den = if rng.gen_bool(0.25) {
        rng.gen_range(2i64..=3)
    } else {
        1
    };
    ratio(num, den)
}

fn random_monomial(rng: &mut impl Rng, n: usize, degree: usize) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A homogeneous polynomial of exactly `degree` with up to `max_terms`
/// terms; never zero.
pub fn random_homogeneous(
    rng: &mut impl Rng,
    n: usize,
    degree: usize,
    max_terms: usize,
) -> Polynomial {
    loop {
        let count = rng.gen_range(1..=max_terms.max(1));
        let mut p = Polynomial::zero(n);
        for _ in 0..count {
            let m = random_monomial(rng, n, degree);
            p += &Polynomial::monomial(n, m, random_coefficient(rng));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// A polynomial of degree at most `max_degree`, mixing several degrees.
pub fn random_polynomial(
    rng: &mut impl Rng,
    n: usize,
    max_degree: usize,
    max_terms: usize,
) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let d = rng.gen_range(0..=max_degree);
        p += &Polynomial::monomial(n, random_monomial(rng, n, d), random_coefficient(rng));
    }
    p
}

/// `sum over h in W_H of h . b`, which is `W_H`-invariant.
pub fn orbit_sum(b: &Polynomial, spec: &GroupSpec, comp: &Composition) -> Result<Polynomial> {
    let mut out = Polynomial::zero(b.nvars());
    for h in weyl::parabolic_elements(spec, comp, DEFAULT_CAP)? {
        out += &h.act(b)?;
    }
    Ok(out)
}

/// Every composition of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(cur.clone()).expect("positive parts"));
            return;
        }
        for k in 1..=rest {
            cur.push(k);
            go(rest - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    Jacobi,
    LagrangeSylvester,
    Box,
    BorelHirzebruch,
}

impl Operator {
    pub fn name(self) -> &'static str {
        match self {
            Operator::Jacobi => "jacobi",
            Operator::LagrangeSylvester => "lagrange-sylvester",
            Operator::Box => "box",
            Operator::BorelHirzebruch => "borel-hirzebruch",
        }
    }
}

/// One corpus entry: a `W_H`-invariant homogeneous input and the operator
/// that pushes it forward along `G/H`.
#[derive(Clone, Debug)]
pub struct Case {
    pub operator: Operator,
    pub bundle: BundleSpec,
    pub input: Polynomial,
}

impl Case {
    pub fn evaluate(&self, convention: Convention) -> Result<Polynomial> {
        let n = self.bundle.rank();
        match self.operator {
            Operator::Jacobi => jacobi_symmetrize(&self.input, n, convention),
            Operator::LagrangeSylvester => {
                lagrange_sylvester(&self.input, n, self.bundle.comp.parts()[0], convention)
            }
            Operator::Box => {
                let mut bundle = self.bundle.clone();
                bundle.convention = convention;
                box_operator(&self.input, &bundle)
            }
            Operator::BorelHirzebruch => {
                borel_hirzebruch(&self.input, self.bundle.group, convention)
            }
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "{} on {}{} comp {} input {}",
            self.operator.name(),
            self.bundle.group.family,
            self.bundle.rank(),
            self.bundle.comp,
            expr::print(&self.input, Alphabet::X)
        )
    }
}

/// The configurations covered by the random corpus: every composition in
/// family A up to `max_n`, and the full flag of B and C up to rank 3.
fn corpus_bundles(max_n: usize) -> Vec<BundleSpec> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for comp in compositions(n) {
            out.push(
                BundleSpec::new(GroupSpec::a(n), comp, Convention::Prop)
                    .expect("valid composition"),
            );
        }
    }
    for family in [Family::B, Family::C] {
        for n in 1..=max_n.min(3) {
            let group = GroupSpec::new(family, n).expect("positive rank");
            out.push(BundleSpec::full_flag(group, Convention::Prop));
        }
    }
    out
}

/// `samples` cases cycling through [`corpus_bundles`]. Degrees are biased
/// towards the fiber dimension so that nonzero outputs are common.
pub fn random_corpus(
    rng: &mut impl Rng,
    max_n: usize,
    max_degree: usize,
    samples: usize,
) -> Result<Vec<Case>> {
    let bundles = corpus_bundles(max_n);
    let mut out = Vec::with_capacity(samples);
    for i in 0..samples {
        let bundle = bundles[i % bundles.len()].clone();
        let n = bundle.rank();
        let dim = bundle.relative_dimension()?;
        let low = if rng.gen_bool(0.5) {
            dim.min(max_degree).saturating_sub(1)
        } else {
            0
        };
        let degree = rng.gen_range(low..=max_degree);
        let raw = random_homogeneous(rng, n, degree, 4);
        let comp = &bundle.comp;
        let operator = if bundle.group.family != Family::A {
            if i % 2 == 0 {
                Operator::Box
            } else {
                Operator::BorelHirzebruch
            }
        } else if comp.is_trivial() {
            Operator::Jacobi
        } else if comp.parts().len() == 2 {
            Operator::LagrangeSylvester
        } else {
            Operator::Box
        };
        let input = if comp.is_trivial() {
            raw
        } else {
            orbit_sum(&raw, &bundle.group, comp)?
        };
        out.push(Case {
            operator,
            bundle,
            input,
        });
    }
    Ok(out)
}

fn global_sign(dim: usize) -> Rational {
    if dim.is_multiple_of(2) {
        ratio(1, 1)
    } else {
        ratio(-1, 1)
    }
}

/// Converts an output computed in `convention` to the `prop` normalization.
fn to_prop(out: Polynomial, dim: usize, convention: Convention) -> Polynomial {
    match convention {
        Convention::Prop => out,
        Convention::Sym => out.scale(&global_sign(dim)),
    }
}

fn show(p: &Polynomial) -> String {
    expr::print(p, Alphabet::X)
}

// ---------------------------------------------------------------------------
// individual checks

/// The Jacobi symmetrizer of `x^(lambda + delta)` is the Schur polynomial.
pub fn check_schur(
    ranks: std::ops::RangeInclusive<usize>,
    max_size: usize,
    convention: Convention,
) -> CheckResult {
    let mut failures = Vec::new();
    let mut count = 0;
    for n in ranks {
        let dim = n * (n - 1) / 2;
        for size in 0..=max_size {
            for lambda in Partition::all_of_size(size, n) {
                count += 1;
                let exps = (0..n)
                    .map(|i| (lambda.part(i) + n - 1 - i) as u32)
                    .collect();
                let b = Polynomial::monomial(n, Monomial::new(exps), ratio(1, 1));
                let got = jacobi_symmetrize(&b, n, convention).map(|o| to_prop(o, dim, convention));
                match (got, schur_bialternant(&lambda, n)) {
                    (Ok(g), Ok(s)) if g == s => {}
                    (g, s) => {
                        failures.push(format!("n={n} lambda={:?}: {g:?} vs {s:?}", lambda.parts()))
                    }
                }
            }
        }
    }
    CheckResult::new("schur identity", &failures, format!("{count} partitions"))
}

/// The projective-bundle pushforward of `x1^(n-1+j)` is `h_j`.
pub fn check_segre(
    ranks: std::ops::RangeInclusive<usize>,
    jmax: usize,
    convention: Convention,
) -> CheckResult {
    let mut failures = Vec::new();
    let mut count = 0;
    for n in ranks {
        for j in 0..=jmax {
            count += 1;
            let mut exps = vec![0u32; n];
            exps[0] = (n - 1 + j) as u32;
            let b = Polynomial::monomial(n, Monomial::new(exps), ratio(1, 1));
            let got =
                lagrange_sylvester(&b, n, 1, convention).map(|o| to_prop(o, n - 1, convention));
            let want = complete_homogeneous(j, n);
            if got.as_ref() != Ok(&want) {
                failures.push(format!("n={n} j={j}: got {got:?}, want {}", show(&want)));
            }
        }
    }
    CheckResult::new("segre identity", &failures, format!("{count} (n, j) pairs"))
}

/// The fraction sum over the whole Weyl group equals the alternant divided
/// by the root product.
pub fn check_two_forms(
    rng: &mut impl Rng,
    max_n: usize,
    max_degree: usize,
    samples: usize,
    convention: Convention,
) -> CheckResult {
    let mut failures = Vec::new();
    let mut nonzero = 0;
    for i in 0..samples {
        let n = 2 + i % (max_n - 1);
        let b = random_polynomial(rng, n, max_degree, 5);
        let bundle = BundleSpec::full_flag(GroupSpec::a(n), convention);
        let fractions = pushforward_by_localization(&b, &bundle);
        let alternant = pushforward_by_alternant(&b, &bundle);
        match (&fractions, &alternant) {
            (Ok(f), Ok(a)) if f == a => nonzero += usize::from(!f.is_zero()),
            _ => failures.push(format!("{}: {fractions:?} vs {alternant:?}", show(&b))),
        }
    }
    CheckResult::new(
        "two-form agreement",
        &failures,
        format!("{samples} inputs, {nonzero} nonzero outputs"),
    )
}

/// Evaluates the corpus once; failures to evaluate are kept per case.
pub fn evaluate_corpus(corpus: &[Case], convention: Convention) -> Vec<Result<Polynomial>> {
    corpus.iter().map(|c| c.evaluate(convention)).collect()
}

/// Every output is a polynomial fixed by the whole Weyl group.
pub fn check_polynomiality(corpus: &[Case], outputs: &[Result<Polynomial>]) -> CheckResult {
    let mut failures = Vec::new();
    for (case, out) in corpus.iter().zip(outputs) {
        match out {
            Ok(o) => match weyl::is_weyl_invariant(o, &case.bundle.group) {
                Ok(true) => {}
                _ => failures.push(format!(
                    "{}: output {} not invariant",
                    case.describe(),
                    show(o)
                )),
            },
            Err(e) => failures.push(format!("{}: {e}", case.describe())),
        }
    }
    CheckResult::new(
        "polynomiality and invariance",
        &failures,
        format!("{} outputs", corpus.len()),
    )
}

/// Outputs drop degree by exactly the fiber dimension, and vanish below it.
pub fn check_degree_law(corpus: &[Case], outputs: &[Result<Polynomial>]) -> CheckResult {
    let mut failures = Vec::new();
    let (mut nonzero, mut below) = (0, 0);
    for (case, out) in corpus.iter().zip(outputs) {
        let Ok(out) = out else {
            failures.push(format!("{}: no output", case.describe()));
            continue;
        };
        let dim = case.bundle.relative_dimension().unwrap_or(usize::MAX) as u64;
        let Some(deg) = case.input.degree().finite() else {
            continue;
        };
        if deg < dim {
            below += 1;
            if !out.is_zero() {
                failures.push(format!(
                    "{}: expected 0, got {}",
                    case.describe(),
                    show(out)
                ));
            }
        } else if let Some(d) = out.degree().finite() {
            nonzero += 1;
            if d != deg - dim {
                failures.push(format!(
                    "{}: output degree {d}, expected {}",
                    case.describe(),
                    deg - dim
                ));
            }
        }
    }
    CheckResult::new(
        "degree law",
        &failures,
        format!("{nonzero} nonzero outputs, {below} inputs below the fiber dimension"),
    )
}

/// `prop` and `sym` outputs differ by `(-1)^dim`.
pub fn check_convention_relation(
    corpus: &[Case],
    prop: &[Result<Polynomial>],
    sym: &[Result<Polynomial>],
) -> CheckResult {
    let mut failures = Vec::new();
    for ((case, p), s) in corpus.iter().zip(prop).zip(sym) {
        let dim = case.bundle.relative_dimension().unwrap_or(0);
        match (p, s) {
            (Ok(p), Ok(s)) if *p == s.scale(&global_sign(dim)) => {}
            _ => failures.push(format!("{}: prop {p:?} sym {s:?}", case.describe())),
        }
    }
    CheckResult::new(
        "convention relation",
        &failures,
        format!("{} cases", corpus.len()),
    )
}

fn full_flag_degree(rng: &mut impl Rng, n: usize) -> usize {
    n * (n - 1) / 2 + rng.gen_range(0..=2)
}

/// The Jacobi symmetrizer equals block Jacobi on `(k, n-k)` followed by
/// Lagrange-Sylvester, for every `k`.
pub fn check_functoriality(
    rng: &mut impl Rng,
    max_n: usize,
    samples: usize,
    convention: Convention,
) -> CheckResult {
    let mut failures = Vec::new();
    let mut comparisons = 0;
    for i in 0..samples {
        let n = 2 + i % (max_n - 1);
        let dim = n * (n - 1) / 2;
        let degree = full_flag_degree(rng, n);
        let b = random_polynomial(rng, n, degree, 4);
        let direct = jacobi_symmetrize(&b, n, convention).map(|o| to_prop(o, dim, convention));
        for k in 1..n {
            comparisons += 1;
            let factored = pushforward_via_factorization(&b, n, k);
            if direct.is_err() || direct != factored {
                failures.push(format!(
                    "n={n} k={k} b={}: {direct:?} vs {factored:?}",
                    show(&b)
                ));
            }
        }
    }
    CheckResult::new(
        "functoriality",
        &failures,
        format!("{comparisons} comparisons"),
    )
}

/// Divided differences along a reduced word of the longest permutation
/// reproduce the Jacobi symmetrizer.
pub fn check_divided_differences(
    rng: &mut impl Rng,
    max_n: usize,
    samples: usize,
    convention: Convention,
) -> CheckResult {
    let mut failures = Vec::new();
    for i in 0..samples {
        let n = 2 + i % (max_n - 1);
        let dim = n * (n - 1) / 2;
        let degree = full_flag_degree(rng, n);
        let b = random_polynomial(rng, n, degree, 4);
        let got = jacobi_symmetrize(&b, n, convention).map(|o| to_prop(o, dim, convention));
        let want = jacobi_via_divided_differences(&b, n);
        if got.is_err() || got != want {
            failures.push(format!("n={n} b={}: {got:?} vs {want:?}", show(&b)));
        }
    }
    CheckResult::new(
        "divided differences",
        &failures,
        format!("{samples} inputs"),
    )
}

/// Group orders, sign via length against the determinant, and coset counts.
pub fn check_weyl_structure(max_a: usize, max_b: usize) -> CheckResult {
    let mut failures = Vec::new();
    let mut elements = 0;
    let mut groups = Vec::new();
    for n in 1..=max_a {
        groups.push(GroupSpec::a(n));
    }
    for family in [Family::B, Family::C] {
        for n in 1..=max_b {
            groups.push(GroupSpec::new(family, n).expect("positive rank"));
        }
    }
    for spec in groups {
        let all = match weyl::enumerate(&spec) {
            Ok(all) => all,
            Err(e) => {
                failures.push(format!("{}{}: {e}", spec.family, spec.rank));
                continue;
            }
        };
        let factorial: usize = (1..=spec.rank).product();
        let want = if spec.family == Family::A {
            factorial
        } else {
            factorial << spec.rank
        };
        if all.len() != want {
            failures.push(format!(
                "{}{}: {} elements, expected {want}",
                spec.family,
                spec.rank,
                all.len()
            ));
        }
        for w in &all {
            elements += 1;
            if w.sign() != w.determinant() {
                failures.push(format!(
                    "{}{}: sign of {w} differs from determinant",
                    spec.family, spec.rank
                ));
            }
        }
    }
    let mut cosets = 0;
    for n in 1..=max_a {
        for comp in compositions(n) {
            cosets += 1;
            let reps = weyl::coset_reps(&GroupSpec::a(n), &comp).map(|r| r.len() as u128);
            if reps.as_ref().ok() != weyl::multinomial(comp.parts()).as_ref() {
                failures.push(format!("A{n} comp {comp}: {reps:?} coset representatives"));
            }
        }
    }
    CheckResult::new(
        "weyl group structure",
        &failures,
        format!("{elements} elements, {cosets} coset spaces"),
    )
}

/// The documented malformed inputs, each with its expected error kind and
/// position.
pub const PARSE_ERROR_CASES: [(&str, usize, usize); 3] =
    [("x0", 2, 1), ("x1 + * x2", 2, 6), ("x1^2147483648", 2, 4)];

/// `parse(print(p)) = p` on random polynomials, and positioned errors on the
/// malformed cases.
pub fn check_parser(rng: &mut impl Rng, samples: usize, max_degree: usize) -> CheckResult {
    let mut failures = Vec::new();
    let alphabets = [Alphabet::X, Alphabet::U, Alphabet::A];
    for _ in 0..samples {
        let n = rng.gen_range(1..=4);
        let p = if rng.gen_bool(0.05) {
            Polynomial::zero(n)
        } else {
            random_polynomial(rng, n, max_degree, 6)
        };
        let alphabet = *alphabets.choose(rng).expect("nonempty");
        let text = expr::print(&p, alphabet);
        match expr::parse(&text, n) {
            Ok(q) if q == p && expr::print(&q, alphabet) == text => {}
            other => failures.push(format!("`{text}` reparsed as {other:?}")),
        }
    }
    for (src, nvars, column) in PARSE_ERROR_CASES {
        match expr::parse(src, nvars) {
            Err(e) if e.line == 1 && e.column == column => {
                let kind_ok = match src {
                    "x0" => matches!(e.kind, ParseErrorKind::VariableIndex { .. }),
                    "x1 + * x2" => matches!(e.kind, ParseErrorKind::Syntax(_)),
                    _ => matches!(e.kind, ParseErrorKind::ExponentOverflow(_)),
                };
                if !kind_ok {
                    failures.push(format!("`{src}`: wrong error kind {e}"));
                }
            }
            other => failures.push(format!(
                "`{src}`: expected an error at column {column}, got {other:?}"
            )),
        }
    }
    CheckResult::new(
        "parser round trip",
        &failures,
        format!(
            "{samples} round trips, {} error cases",
            PARSE_ERROR_CASES.len()
        ),
    )
}

/// `op(a b + c d) = a op(b) + c op(d)` for rational `a`, `c`.
pub fn check_linearity(rng: &mut impl Rng, corpus: &[Case], convention: Convention) -> CheckResult {
    let mut failures = Vec::new();
    for pair in corpus.chunks(2) {
        let [first, _] = pair else { continue };
        let other = Case {
            input: pair[1].input.clone(),
            ..first.clone()
        };
        if other.input.nvars() != first.input.nvars() || pair[1].bundle != first.bundle {
            continue;
        }
        let (a, c) = (random_coefficient(rng), random_coefficient(rng));
        let combined = Case {
            input: &first.input.scale(&a) + &other.input.scale(&c),
            ..first.clone()
        };
        let lhs = combined.evaluate(convention);
        let rhs = first.evaluate(convention).and_then(|x| {
            other
                .evaluate(convention)
                .map(|y| &x.scale(&a) + &y.scale(&c))
        });
        if lhs.is_err() || lhs != rhs {
            failures.push(format!("{}: {lhs:?} vs {rhs:?}", first.describe()));
        }
    }
    CheckResult::new("linearity", &failures, "paired corpus inputs".into())
}

/// `op(s b) = s op(b)` for `W_G`-invariant `s`.
pub fn check_projection_formula(
    rng: &mut impl Rng,
    corpus: &[Case],
    convention: Convention,
) -> CheckResult {
    let mut failures = Vec::new();
    for case in corpus {
        let group = case.bundle.group;
        let n = group.rank;
        let raw = random_polynomial(rng, n, 2, 2);
        let s = weyl::enumerate(&group).and_then(|all| {
            all.iter()
                .try_fold(Polynomial::zero(n), |acc, w| Ok(&acc + &w.act(&raw)?))
        });
        let Ok(s) = s else { continue };
        let scaled = Case {
            input: &s * &case.input,
            ..case.clone()
        };
        let lhs = scaled.evaluate(convention);
        let rhs = case.evaluate(convention).map(|o| &s * &o);
        if lhs.is_err() || lhs != rhs {
            let mut msg = case.describe();
            let _ = write!(msg, " with s = {}: {lhs:?} vs {rhs:?}", show(&s));
            failures.push(msg);
        }
    }
    CheckResult::new(
        "projection formula",
        &failures,
        format!("{} cases", corpus.len()),
    )
}

/// Runs every check at the ranks and degrees of `config`.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let max_n = config.max_n.max(2);
    let conv = config.convention;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks = Vec::new();
    checks.push(check_schur(2..=max_n, config.max_degree, conv));
    checks.push(check_segre(2..=max_n + 2, 4, conv));
    checks.push(check_two_forms(
        &mut rng,
        max_n,
        config.max_degree,
        config.samples,
        conv,
    ));
    let corpus = random_corpus(&mut rng, max_n, config.max_degree, config.samples)?;
    let prop = evaluate_corpus(&corpus, Convention::Prop);
    let sym = evaluate_corpus(&corpus, Convention::Sym);
    let chosen = if conv == Convention::Prop {
        &prop
    } else {
        &sym
    };
    checks.push(check_polynomiality(&corpus, chosen));
    checks.push(check_degree_law(&corpus, chosen));
    checks.push(check_functoriality(
        &mut rng,
        max_n + 1,
        config.samples.div_ceil(2),
        conv,
    ));
    checks.push(check_divided_differences(
        &mut rng,
        max_n,
        config.samples.div_ceil(2),
        conv,
    ));
    checks.push(check_weyl_structure(max_n + 2, max_n));
    checks.push(check_convention_relation(&corpus, &prop, &sym));
    checks.push(check_parser(
        &mut rng,
        2 * config.samples,
        config.max_degree,
    ));
    checks.push(check_linearity(&mut rng, &corpus, conv));
    checks.push(check_projection_formula(&mut rng, &corpus, conv));
    Ok(SuiteReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        for n in 1..=6 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn orbit_sums_are_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let spec = GroupSpec::a(4);
        for comp in compositions(4) {
            let b = random_homogeneous(&mut rng, 4, 3, 3);
            let s = orbit_sum(&b, &spec, &comp).unwrap();
            assert!(weyl::is_invariant(&s, &spec, &comp).unwrap());
        }
    }

    #[test]
    fn random_homogeneous_has_the_requested_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in 0..5 {
            let p = random_homogeneous(&mut rng, 3, d, 4);
            assert!(p.terms().all(|(m, _)| m.degree() == d as u64));
        }
    }

    #[test]
    fn corpus_inputs_satisfy_preconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for case in random_corpus(&mut rng, 3, 4, 40).unwrap() {
            assert!(
                weyl::is_invariant(&case.input, &case.bundle.group, &case.bundle.comp).unwrap()
            );
        }
    }

    #[test]
    fn small_suite_passes() {
        let config = SuiteConfig {
            max_n: 3,
            max_degree: 4,
            samples: 20,
            ..SuiteConfig::default()
        };
        let report = run_suite(&config).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        let sym = run_suite(&SuiteConfig {
            convention: Convention::Sym,
            ..config
        })
        .unwrap();
        assert!(sym.all_passed());
    }

    #[test]
    fn a_wrong_oracle_is_reported() {
        let corpus = vec![Case {
            operator: Operator::Jacobi,
            bundle: BundleSpec::full_flag(GroupSpec::a(2), Convention::Prop),
            input: expr::parse("x1", 2).unwrap(),
        }];
        let wrong = vec![Ok(Polynomial::from_int(2, -1))];
        let right = vec![Ok(Polynomial::one(2))];
        assert!(!check_convention_relation(&corpus, &right, &right).passed);
        assert!(check_convention_relation(&corpus, &right, &wrong).passed);
    }
}
