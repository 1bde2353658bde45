//! Classical Weyl groups: the symmetric group (family A) and signed
//! permutations (families B and C, which share a Weyl group).
//!
//! An element is stored as a permutation `perm` of `0..n` together with a
//! sign vector indexed by target position. It acts on polynomials by the
//! substitution `x_i -> signs[perm[i]] * x_{perm[i]}`, which for family A
//! is `b(x_1, ..., x_n) -> b(x_{w(1)}, ..., x_{w(n)})`. [`WeylElement::compose`]
//! is defined so that `act(v, act(w, p)) == act(v.compose(w), p)`.

use std::fmt;
use std::str::FromStr;

use crate::arith::Polynomial;
use crate::error::{Error, Result};

/// Default bound on the number of group elements enumerated at once.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    pub fn has_sign_changes(self) -> bool {
        !matches!(self, Family::A)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::Unsupported(format!("group family `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub rank: usize,
}

impl GroupSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Unsupported("rank must be positive".into()));
        }
        Ok(GroupSpec { family, rank })
    }

    pub fn a(rank: usize) -> Self {
        GroupSpec::new(Family::A, rank).expect("positive rank")
    }

    /// `|W|`, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        let mut total: usize = 1;
        for k in 1..=self.rank {
            total = total.checked_mul(k)?;
            if self.family.has_sign_changes() {
                total = total.checked_mul(2)?;
            }
        }
        Some(total)
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        match self.order() {
            Some(size) if size <= cap => Ok(()),
            Some(size) => Err(Error::CapExceeded {
                size: size.to_string(),
                cap,
            }),
            None => Err(Error::CapExceeded {
                size: "overflow".into(),
                cap,
            }),
        }
    }
}

/// A block decomposition `(k_1, ..., k_r)` of `1..=n`; in family A it
/// names the parabolic subgroup `S_{k_1} x ... x S_{k_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            let rank = parts.iter().sum();
            return Err(Error::IncompatibleComposition { parts, rank });
        }
        Ok(Composition { parts })
    }

    /// `(1, ..., 1)`: the torus, fiber `G/T`.
    pub fn trivial(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    /// `(n)`: the whole group, fiber a point.
    pub fn whole(n: usize) -> Self {
        Composition { parts: vec![n] }
    }

    /// `(k, n - k)`, the Grassmannian composition.
    pub fn grassmann(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::IncompatibleComposition {
                parts: vec![k, n.saturating_sub(k)],
                rank: n,
            });
        }
        Ok(Composition {
            parts: vec![k, n - k],
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&k| k == 1)
    }

    pub fn is_whole(&self) -> bool {
        self.parts.len() == 1
    }

    /// Whether `comp` names `H = G` in `spec`. In families B and C the
    /// rank-one composition `(1)` is read as the full flag, `H = T`.
    pub fn is_whole_in(&self, spec: &GroupSpec) -> bool {
        self.is_whole() && !(spec.family.has_sign_changes() && self.is_trivial())
    }

    /// Zero-based index ranges of the blocks.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&k| {
                let r = start..start + k;
                start += k;
                r
            })
            .collect()
    }

    /// Zero-based index of the block containing each position.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.rank());
        for (b, &k) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat_n(b, k));
        }
        out
    }

    /// Errors unless the parts sum to the rank and, for families B and C,
    /// the composition is one of the two supported extremes.
    pub fn check(&self, spec: &GroupSpec) -> Result<()> {
        if self.rank() != spec.rank {
            return Err(Error::IncompatibleComposition {
                parts: self.parts.clone(),
                rank: spec.rank,
            });
        }
        if spec.family.has_sign_changes() && !self.is_trivial() && !self.is_whole() {
            return Err(Error::Unsupported(format!(
                "family {} supports only the compositions (1,...,1) and ({})",
                spec.family, spec.rank
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// Builds an element from a zero-based permutation and a sign vector.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Internal(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Internal(format!("bad sign vector {signs:?}")));
        }
        Ok(WeylElement { perm, signs })
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    /// Swap of positions `i` and `i + 1` (zero-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i, i + 1);
        w
    }

    /// Sign change of the variable with zero-based index `i`.
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.signs[i] = -1;
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn belongs_to(&self, spec: &GroupSpec) -> bool {
        self.rank() == spec.rank
            && (spec.family.has_sign_changes() || self.signs.iter().all(|&s| s == 1))
    }

    /// Signed one-line notation: position `i` maps to `±(perm[i] + 1)`.
    pub fn one_line(&self) -> Vec<i64> {
        self.perm
            .iter()
            .map(|&p| self.signs[p] as i64 * (p as i64 + 1))
            .collect()
    }

    /// The product `self * other`, acting as `self` after `other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank(), other.rank());
        let n = self.rank();
        let perm: Vec<usize> = (0..n).map(|i| self.perm[other.perm[i]]).collect();
        let inv = self.inverse_perm();
        let signs = (0..n)
            .map(|k| other.signs[inv[k]] * self.signs[k])
            .collect();
        WeylElement { perm, signs }
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.rank()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        inv
    }

    pub fn inverse(&self) -> WeylElement {
        let inv = self.inverse_perm();
        let mut signs = vec![1; self.rank()];
        for (k, &s) in self.signs.iter().enumerate() {
            signs[inv[k]] = s;
        }
        WeylElement { perm: inv, signs }
    }

    /// Number of simple reflections in a reduced word.
    ///
    /// Family A uses `s_i = (i, i+1)`; families B and C add `s_0`, the sign
    /// change of the first coordinate. For signed one-line notation
    /// `w(1..n)` this is `inv(w) - sum_{w(j) < 0} w(j)`.
    pub fn length(&self) -> usize {
        let w = self.one_line();
        let mut len = 0usize;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    len += 1;
                }
            }
        }
        for &v in &w {
            if v < 0 {
                len += (-v) as usize;
            }
        }
        len
    }

    /// `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Determinant of the signed permutation matrix.
    pub fn determinant(&self) -> i64 {
        let mut visited = vec![false; self.rank()];
        let mut det = 1i64;
        for start in 0..self.rank() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len % 2 == 0 {
                det = -det;
            }
        }
        det * self.signs.iter().map(|&s| s as i64).product::<i64>()
    }

    /// `w . p`: substitutes `x_i -> signs[perm[i]] * x_{perm[i]}`.
    pub fn act(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.nvars() != self.rank() {
            return Err(Error::ArityMismatch {
                expected: self.rank(),
                found: p.nvars(),
            });
        }
        let negate: Vec<bool> = self.perm.iter().map(|&t| self.signs[t] < 0).collect();
        Ok(p.substitute_signed(&self.perm, &negate))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All elements of `W`, permutations in lexicographic order with sign
/// vectors counted in binary beneath each permutation.
pub fn enumerate(spec: &GroupSpec) -> Result<Vec<WeylElement>> {
    enumerate_with_cap(spec, DEFAULT_CAP)
}

pub fn enumerate_with_cap(spec: &GroupSpec, cap: usize) -> Result<Vec<WeylElement>> {
    spec.check_cap(cap)?;
    let n = spec.rank;
    let mut out = Vec::with_capacity(spec.order().unwrap_or(0));
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if spec.family.has_sign_changes() {
            for mask in 0u64..(1u64 << n) {
                let signs = (0..n)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(WeylElement {
                    perm: perm.clone(),
                    signs,
                });
            }
        } else {
            out.push(WeylElement {
                perm: perm.clone(),
                signs: vec![1; n],
            });
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

/// Simple reflections: `s_1..s_{n-1}` and, for B/C, the sign change `s_0`
/// listed first.
pub fn simple_reflections(spec: &GroupSpec) -> Vec<WeylElement> {
    let n = spec.rank;
    let mut out = Vec::new();
    if spec.family.has_sign_changes() {
        out.push(WeylElement::sign_flip(n, 0));
    }
    out.extend((0..n.saturating_sub(1)).map(|i| WeylElement::transposition(n, i)));
    out
}

/// Generators of the parabolic subgroup `W_H` named by `comp`.
pub fn parabolic_generators(spec: &GroupSpec, comp: &Composition) -> Result<Vec<WeylElement>> {
    comp.check(spec)?;
    if spec.family.has_sign_changes() {
        return Ok(if comp.is_whole_in(spec) {
            simple_reflections(spec)
        } else {
            Vec::new()
        });
    }
    let mut out = Vec::new();
    for block in comp.blocks() {
        for i in block.start..block.end.saturating_sub(1) {
            out.push(WeylElement::transposition(spec.rank, i));
        }
    }
    Ok(out)
}

/// All elements of `W_H`.
pub fn parabolic_elements(
    spec: &GroupSpec,
    comp: &Composition,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    comp.check(spec)?;
    if spec.family.has_sign_changes() {
        return if comp.is_whole_in(spec) {
            enumerate_with_cap(spec, cap)
        } else {
            Ok(vec![WeylElement::identity(spec.rank)])
        };
    }
    let mut out = vec![WeylElement::identity(spec.rank)];
    for block in comp.blocks() {
        let sub = enumerate_with_cap(&GroupSpec::a(block.len()), cap)?;
        if out.len().saturating_mul(sub.len()) > cap {
            return Err(Error::CapExceeded {
                size: "parabolic subgroup".into(),
                cap,
            });
        }
        let mut next = Vec::with_capacity(out.len() * sub.len());
        for w in &out {
            for s in &sub {
                let mut perm = w.perm.clone();
                for (i, &p) in s.perm.iter().enumerate() {
                    perm[block.start + i] = block.start + p;
                }
                next.push(WeylElement {
                    perm,
                    signs: vec![1; spec.rank],
                });
            }
        }
        out = next;
    }
    Ok(out)
}

/// Minimal-length representatives of the left cosets `w W_H`.
///
/// In family A these are the permutations whose one-line notation is
/// increasing inside every block. Families B and C support only the two
/// extreme compositions.
pub fn coset_reps(spec: &GroupSpec, comp: &Composition) -> Result<Vec<WeylElement>> {
    coset_reps_with_cap(spec, comp, DEFAULT_CAP)
}

pub fn coset_reps_with_cap(
    spec: &GroupSpec,
    comp: &Composition,
    cap: usize,
) -> Result<Vec<WeylElement>> {
    comp.check(spec)?;
    if comp.is_whole_in(spec) {
        return Ok(vec![WeylElement::identity(spec.rank)]);
    }
    if spec.family.has_sign_changes() || comp.is_trivial() {
        return enumerate_with_cap(spec, cap);
    }
    if multinomial(comp.parts()).is_none_or(|m| m > cap as u128) {
        return Err(Error::CapExceeded {
            size: "coset space".into(),
            cap,
        });
    }
    let n = spec.rank;
    let mut out = Vec::new();
    let mut perm = vec![0; n];
    let mut used = vec![false; n];
    fill_blocks(&comp.blocks(), 0, 0, 0, &mut perm, &mut used, &mut out);
    Ok(out)
}

// Assigns an increasing run of unused values to each block in turn.
fn fill_blocks(
    blocks: &[std::ops::Range<usize>],
    block: usize,
    pos: usize,
    min_value: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<WeylElement>,
) {
    if block == blocks.len() {
        out.push(WeylElement {
            perm: perm.clone(),
            signs: vec![1; perm.len()],
        });
        return;
    }
    let range = &blocks[block];
    if pos == range.end {
        fill_blocks(blocks, block + 1, pos, 0, perm, used, out);
        return;
    }
    for v in min_value..perm.len() {
        if used[v] {
            continue;
        }
        used[v] = true;
        perm[pos] = v;
        fill_blocks(blocks, block, pos + 1, v + 1, perm, used, out);
        used[v] = false;
    }
}

/// `n! / (k_1! ... k_r!)`, or `None` on overflow.
pub fn multinomial(parts: &[usize]) -> Option<u128> {
    let mut total: u128 = 1;
    let mut n: u128 = 0;
    for &k in parts {
        for i in 1..=k as u128 {
            n += 1;
            total = total.checked_mul(n)? / i;
        }
    }
    Some(total)
}

/// Whether `p` is fixed by every generator of `W_H`.
pub fn is_invariant(p: &Polynomial, spec: &GroupSpec, comp: &Composition) -> Result<bool> {
    for g in parabolic_generators(spec, comp)? {
        if g.act(p)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `p` is fixed by every simple reflection of `W_G`.
pub fn is_weyl_invariant(p: &Polynomial, spec: &GroupSpec) -> Result<bool> {
    for g in simple_reflections(spec) {
        if g.act(p)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet, VecDeque};

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(n, i - 1)
    }

    fn b(n: usize) -> GroupSpec {
        GroupSpec::new(Family::B, n).unwrap()
    }

    // Word length by breadth-first search over the Cayley graph.
    fn bfs_lengths(spec: &GroupSpec) -> HashMap<WeylElement, usize> {
        let gens = simple_reflections(spec);
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        let id = WeylElement::identity(spec.rank);
        dist.insert(id.clone(), 0);
        queue.push_back(id);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for g in &gens {
                let next = w.compose(g);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate(&GroupSpec::a(3)).unwrap().len(), 6);
        assert_eq!(enumerate(&b(2)).unwrap().len(), 8);
        let one = enumerate(&GroupSpec::a(1)).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].is_identity());
        let all = enumerate(&b(3)).unwrap();
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 48);
    }

    #[test]
    fn cap_is_enforced() {
        let e = enumerate_with_cap(&GroupSpec::a(5), 100).unwrap_err();
        assert!(matches!(e, Error::CapExceeded { .. }));
        assert!(enumerate_with_cap(&GroupSpec::a(5), 120).is_ok());
        assert!(GroupSpec::a(40).order().is_none());
        assert!(enumerate(&GroupSpec::a(40)).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(WeylElement::identity(3).length(), 0);
        assert_eq!(WeylElement::transposition(3, 0).length(), 1);
        let longest = WeylElement::from_perm(vec![2, 1, 0]).unwrap();
        assert_eq!(longest.length(), 3);
        assert_eq!(WeylElement::sign_flip(2, 0).length(), 1);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(WeylElement::identity(3).sign(), 1);
        assert_eq!(WeylElement::transposition(3, 1).sign(), -1);
        let flip = WeylElement::new(vec![0, 1], vec![1, -1]).unwrap();
        assert_eq!(flip.sign(), -1);
        assert_eq!(flip.determinant(), -1);
    }

    #[test]
    fn length_matches_breadth_first_search() {
        for spec in [GroupSpec::a(4), b(3), b(4)] {
            let dist = bfs_lengths(&spec);
            assert_eq!(dist.len(), spec.order().unwrap());
            for (w, d) in dist {
                assert_eq!(w.length(), d, "{w}");
            }
        }
    }

    #[test]
    fn sign_is_determinant_exhaustively() {
        for n in 1..=4 {
            for spec in [GroupSpec::a(n), b(n)] {
                for w in enumerate(&spec).unwrap() {
                    assert_eq!(w.sign(), w.determinant(), "{w}");
                }
            }
        }
    }

    #[test]
    fn act_examples() {
        let s1 = WeylElement::transposition(2, 0);
        assert_eq!(s1.act(&x(2, 1)).unwrap(), x(2, 2));
        let p = &(&x(3, 1) * &x(3, 2).pow(2)) + &x(3, 3);
        assert_eq!(WeylElement::identity(3).act(&p).unwrap(), p);
        let flip = WeylElement::new(vec![0, 1], vec![1, -1]).unwrap();
        assert_eq!(flip.act(&x(2, 2).pow(2)).unwrap(), x(2, 2).pow(2));
        assert_eq!(flip.act(&x(2, 2)).unwrap(), -x(2, 2));
        assert!(s1.act(&x(3, 1)).is_err());
    }

    #[test]
    fn compose_is_a_group_action() {
        let spec = b(3);
        let all = enumerate(&spec).unwrap();
        let p = &(&(&x(3, 1) * &x(3, 2).pow(2)) + &x(3, 3).pow(3)) + &x(3, 1).pow(2);
        for v in all.iter().step_by(5) {
            for w in all.iter().step_by(7) {
                let lhs = v.act(&w.act(&p).unwrap()).unwrap();
                let rhs = v.compose(w).act(&p).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(v.compose(w).sign(), v.sign() * w.sign());
            }
            assert!(v.compose(&v.inverse()).is_identity());
            assert!(v.inverse().compose(v).is_identity());
        }
    }

    #[test]
    fn coset_counts() {
        let a3 = GroupSpec::a(3);
        let c12 = Composition::new(vec![1, 2]).unwrap();
        assert_eq!(coset_reps(&a3, &c12).unwrap().len(), 3);
        let a4 = GroupSpec::a(4);
        assert_eq!(
            coset_reps(&a4, &Composition::new(vec![2, 2]).unwrap())
                .unwrap()
                .len(),
            6
        );
        let all: HashSet<_> = coset_reps(&a4, &Composition::trivial(4))
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(all.len(), 24);
        assert_eq!(multinomial(&[2, 1, 3]), Some(60));
    }

    #[test]
    fn coset_reps_are_minimal_and_partition_the_group() {
        let comps = [
            vec![1, 3],
            vec![2, 2],
            vec![3, 1],
            vec![1, 2, 1],
            vec![2, 1, 1],
            vec![4],
            vec![1, 1, 1, 1],
        ];
        let spec = GroupSpec::a(4);
        let all: HashSet<_> = enumerate(&spec).unwrap().into_iter().collect();
        for parts in comps {
            let comp = Composition::new(parts.clone()).unwrap();
            let reps = coset_reps(&spec, &comp).unwrap();
            assert_eq!(reps.len() as u128, multinomial(&parts).unwrap());
            let wh = parabolic_elements(&spec, &comp, DEFAULT_CAP).unwrap();
            let mut union = HashSet::new();
            for r in &reps {
                let coset: Vec<_> = wh.iter().map(|u| r.compose(u)).collect();
                let min = coset.iter().map(WeylElement::length).min().unwrap();
                assert_eq!(r.length(), min, "{parts:?} {r}");
                assert_eq!(coset.iter().filter(|w| w.length() == min).count(), 1);
                for w in coset {
                    assert!(union.insert(w), "cosets overlap for {parts:?}");
                }
            }
            assert_eq!(union, all);
        }
    }

    #[test]
    fn signed_coset_reps() {
        let spec = b(2);
        assert_eq!(
            coset_reps(&spec, &Composition::trivial(2)).unwrap().len(),
            8
        );
        assert_eq!(coset_reps(&spec, &Composition::whole(2)).unwrap().len(), 1);
        let e = coset_reps(&b(3), &Composition::new(vec![1, 2]).unwrap()).unwrap_err();
        assert!(matches!(e, Error::Unsupported(_)));
    }

    #[test]
    fn incompatible_composition() {
        let e = coset_reps(&GroupSpec::a(3), &Composition::new(vec![1, 1]).unwrap()).unwrap_err();
        assert!(matches!(e, Error::IncompatibleComposition { .. }));
        assert!(Composition::new(vec![2, 0]).is_err());
        assert!(Composition::grassmann(3, 0).is_err());
        assert!(Composition::grassmann(3, 3).is_err());
    }

    #[test]
    fn invariance_examples() {
        let a2 = GroupSpec::a(2);
        let whole = Composition::whole(2);
        assert!(is_invariant(&(&x(2, 1) + &x(2, 2)), &a2, &whole).unwrap());
        assert!(!is_invariant(&x(2, 1), &a2, &whole).unwrap());
        let p = &x(3, 1) * &(&x(3, 2) + &x(3, 3));
        let comp = Composition::new(vec![1, 2]).unwrap();
        assert!(is_invariant(&p, &GroupSpec::a(3), &comp).unwrap());
        assert!(!is_invariant(&p, &GroupSpec::a(3), &Composition::whole(3)).unwrap());
        // B2: even in each variable and symmetric
        let q = &x(2, 1).pow(2) + &x(2, 2).pow(2);
        assert!(is_invariant(&q, &b(2), &Composition::whole(2)).unwrap());
        assert!(!is_invariant(&(&x(2, 1) + &x(2, 2)), &b(2), &Composition::whole(2)).unwrap());
    }

    #[test]
    fn parabolic_subgroup_orders() {
        let spec = GroupSpec::a(5);
        let comp = Composition::new(vec![2, 3]).unwrap();
        let wh = parabolic_elements(&spec, &comp, DEFAULT_CAP).unwrap();
        assert_eq!(wh.len(), 12);
        assert_eq!(wh.iter().collect::<HashSet<_>>().len(), 12);
    }
}
