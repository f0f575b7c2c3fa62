//! Formal linear combinations of Specht and spin characters, and the
//! induction/restriction calculus acting on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::charvalues::{as_map, linear_brauer, spin_brauer, CharLabel};
use crate::error::{Error, Result};
use crate::nodes::{addable_nodes_mod, removable_nodes_mod, spin_additions, spin_removals};
use crate::partition::{Partition, StrictPartition};
use crate::scalar::{sqrt2_pow, Scalar};

/// Which orthonormal basis a vector is written in. Linear vectors carry the
/// modulus used for residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "basis", rename_all = "lowercase")]
pub enum Basis {
    Linear { p: usize },
    Spin,
}

impl Basis {
    pub fn linear() -> Self {
        Basis::Linear { p: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVector {
    basis: Basis,
    n: usize,
    terms: BTreeMap<CharLabel, Scalar>,
}

impl CharVector {
    pub fn zero(basis: Basis, n: usize) -> Self {
        CharVector { basis, n, terms: BTreeMap::new() }
    }

    pub fn specht(lambda: &Partition) -> Self {
        Self::specht_mod(lambda, 2)
    }

    pub fn specht_mod(lambda: &Partition, p: usize) -> Self {
        let mut v = Self::zero(Basis::Linear { p }, lambda.size());
        v.terms.insert(CharLabel::Specht(lambda.clone()), Scalar::one());
        v
    }

    pub fn spin(alpha: &StrictPartition) -> Self {
        let mut v = Self::zero(Basis::Spin, alpha.size());
        v.terms.insert(CharLabel::Spin(alpha.clone()), Scalar::one());
        v
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending label order.
    pub fn terms(&self) -> impl Iterator<Item = (&CharLabel, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, label: &CharLabel) -> Scalar {
        self.terms.get(label).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeff_specht(&self, lambda: &Partition) -> Scalar {
        self.coeff(&CharLabel::Specht(lambda.clone()))
    }

    pub fn coeff_spin(&self, alpha: &StrictPartition) -> Scalar {
        self.coeff(&CharLabel::Spin(alpha.clone()))
    }

    /// Adds `c · label`; the label must match the basis and size.
    pub fn add_term(&mut self, label: CharLabel, c: &Scalar) -> Result<()> {
        let size = match (&label, self.basis) {
            (CharLabel::Specht(l), Basis::Linear { .. }) => l.size(),
            (CharLabel::Spin(a), Basis::Spin) => a.size(),
            _ => return Err(Error::Domain(format!("{label} does not belong to this basis"))),
        };
        if size != self.n {
            return Err(Error::SizeMismatch(self.n, size));
        }
        self.push(label, c);
        Ok(())
    }

    fn push(&mut self, label: CharLabel, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&label) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&label);
        } else {
            self.terms.insert(label, sum);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> CharVector {
        let mut out = Self::zero(self.basis, self.n);
        for (l, v) in &self.terms {
            out.push(l.clone(), &(v * c));
        }
        out
    }

    pub fn try_add(&self, other: &CharVector) -> Result<CharVector> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (l, v) in &other.terms {
            out.push(l.clone(), v);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CharVector) -> Result<CharVector> {
        self.try_add(&other.scaled(&Scalar::from_int(-1)))
    }

    /// The standard inner product, for which the labels are orthonormal.
    pub fn inner(&self, other: &CharVector) -> Result<Scalar> {
        self.check_compatible(other)?;
        let mut s = Scalar::zero();
        for (l, v) in &self.terms {
            if let Some(w) = other.terms.get(l) {
                s += &(v * w);
            }
        }
        Ok(s)
    }

    fn check_compatible(&self, other: &CharVector) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Domain("vectors in different bases".into()));
        }
        if self.n != other.n && !self.is_zero() && !other.is_zero() {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn map_labels<F>(&self, n: usize, f: F) -> CharVector
    where
        F: Fn(&CharLabel) -> Vec<(CharLabel, Scalar)>,
    {
        let mut out = Self::zero(self.basis, n);
        for (l, c) in &self.terms {
            for (m, k) in f(l) {
                out.push(m, &(c * &k));
            }
        }
        out
    }
}

fn r_subsets<T: Clone>(items: &[T], r: usize) -> Vec<Vec<T>> {
    if r == 0 {
        return vec![vec![]];
    }
    if items.len() < r {
        return vec![];
    }
    let mut out = Vec::new();
    for mut rest in r_subsets(&items[1..], r - 1) {
        rest.insert(0, items[0].clone());
        out.push(rest);
    }
    out.extend(r_subsets(&items[1..], r));
    out
}

/// `b` of the spin branching rule: columns `c ≥ 2` meeting `α ∖ β` whose
/// neighbouring columns do not.
pub fn spin_branch_exponent_by_columns(alpha: &StrictPartition, beta: &StrictPartition) -> usize {
    let cols: BTreeSet<usize> = alpha
        .nodes()
        .filter(|n| beta.part(n.row) < n.col)
        .map(|n| n.col)
        .collect();
    cols.iter()
        .filter(|&&c| c >= 2 && !cols.contains(&(c - 1)) && !cols.contains(&(c + 1)))
        .count()
}

/// `b` as the number of even integers that are parts of exactly one of `α`, `β`.
pub fn spin_branch_exponent(alpha: &StrictPartition, beta: &StrictPartition) -> usize {
    alpha
        .parts()
        .iter()
        .chain(beta.parts())
        .filter(|&&p| p % 2 == 0 && alpha.has_part(p) != beta.has_part(p))
        .count()
}

fn linear_e(lambda: &Partition, eps: usize, r: usize, p: usize) -> Vec<(CharLabel, Scalar)> {
    let removable = removable_nodes_mod(lambda, eps, p);
    r_subsets(&removable, r)
        .into_iter()
        .map(|set| {
            let mut parts = lambda.parts().to_vec();
            for n in &set {
                parts[n.row - 1] -= 1;
            }
            (CharLabel::Specht(Partition::from_unsorted(parts)), Scalar::one())
        })
        .collect()
}

fn linear_f(lambda: &Partition, eps: usize, r: usize, p: usize) -> Vec<(CharLabel, Scalar)> {
    let addable = addable_nodes_mod(lambda, eps, p);
    r_subsets(&addable, r)
        .into_iter()
        .map(|set| {
            let mut parts = lambda.parts().to_vec();
            parts.push(0);
            for n in &set {
                parts[n.row - 1] += 1;
            }
            (CharLabel::Specht(Partition::from_unsorted(parts)), Scalar::one())
        })
        .collect()
}

fn spin_e(alpha: &StrictPartition, eps: usize, r: usize) -> Vec<(CharLabel, Scalar)> {
    if r == 0 {
        return vec![(CharLabel::Spin(alpha.clone()), Scalar::one())];
    }
    spin_removals(alpha, eps)
        .into_iter()
        .filter(|b| b.size() + r == alpha.size())
        .map(|b| {
            let c = sqrt2_pow(spin_branch_exponent(alpha, &b) as i64);
            (CharLabel::Spin(b), c)
        })
        .collect()
}

fn spin_f(alpha: &StrictPartition, eps: usize, r: usize) -> Vec<(CharLabel, Scalar)> {
    if r == 0 {
        return vec![(CharLabel::Spin(alpha.clone()), Scalar::one())];
    }
    spin_additions(alpha, eps)
        .into_iter()
        .filter(|b| b.size() == alpha.size() + r)
        .map(|b| {
            let c = sqrt2_pow(spin_branch_exponent(&b, alpha) as i64);
            (CharLabel::Spin(b), c)
        })
        .collect()
}

/// `e_ε^{(r)} v`.
pub fn apply_e(eps: usize, r: usize, v: &CharVector) -> CharVector {
    if r > v.n {
        return CharVector::zero(v.basis, 0);
    }
    let m = v.n - r;
    match v.basis {
        Basis::Linear { p } => v.map_labels(m, |l| match l {
            CharLabel::Specht(lambda) => linear_e(lambda, eps % p, r, p),
            CharLabel::Spin(_) => unreachable!("basis checked on insertion"),
        }),
        Basis::Spin => v.map_labels(m, |l| match l {
            CharLabel::Spin(alpha) => spin_e(alpha, eps % 2, r),
            CharLabel::Specht(_) => unreachable!("basis checked on insertion"),
        }),
    }
}

/// `f_ε^{(r)} v`.
pub fn apply_f(eps: usize, r: usize, v: &CharVector) -> CharVector {
    let m = v.n + r;
    match v.basis {
        Basis::Linear { p } => v.map_labels(m, |l| match l {
            CharLabel::Specht(lambda) => linear_f(lambda, eps % p, r, p),
            CharLabel::Spin(_) => unreachable!("basis checked on insertion"),
        }),
        Basis::Spin => v.map_labels(m, |l| match l {
            CharLabel::Spin(alpha) => spin_f(alpha, eps % 2, r),
            CharLabel::Specht(_) => unreachable!("basis checked on insertion"),
        }),
    }
}

fn sign(k: i64) -> Scalar {
    Scalar::from_int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn accumulate(acc: &mut Option<CharVector>, term: CharVector) -> Result<()> {
    *acc = Some(match acc.take() {
        None => term,
        Some(a) if a.is_zero() => term,
        Some(a) if term.is_zero() => a,
        Some(a) => a.try_add(&term)?,
    });
    Ok(())
}

/// `S_ε^{(c)} v = Σ_a (−1)^{a+c} f^{(a+c)} e^{(a)} v`.
pub fn runner_swap(eps: usize, c: i64, v: &CharVector) -> Result<CharVector> {
    let start = 0.max(-c) as usize;
    let target = v.n as i64 + c;
    let mut acc = None;
    for a in start..=v.n {
        let down = apply_e(eps, a, v);
        if down.is_zero() {
            break;
        }
        let up = apply_f(eps, (a as i64 + c) as usize, &down);
        accumulate(&mut acc, up.scaled(&sign(a as i64 + c)))?;
    }
    Ok(acc.unwrap_or_else(|| CharVector::zero(v.basis, target.max(0) as usize)))
}

/// `R_ε^{(d)} v = Σ_a (−1)^{a+d} f_ε^{(a+d)} f_ε̄^{(a+d)} e_ε̄^{(a)} e_ε^{(a)} v`.
pub fn quot_red(eps: usize, d: i64, v: &CharVector) -> Result<CharVector> {
    if !matches!(v.basis, Basis::Linear { p: 2 } | Basis::Spin) {
        return Err(Error::Domain("quotient redistribution needs p = 2".into()));
    }
    let bar = 1 - eps % 2;
    let start = 0.max(-d) as usize;
    let target = v.n as i64 + 2 * d;
    let mut acc = None;
    for a in start..=v.n {
        let first = apply_e(eps, a, v);
        if first.is_zero() {
            break;
        }
        let down = apply_e(bar, a, &first);
        let k = (a as i64 + d) as usize;
        let up = apply_f(eps, k, &apply_f(bar, k, &down));
        accumulate(&mut acc, up.scaled(&sign(a as i64 + d)))?;
    }
    Ok(acc.unwrap_or_else(|| CharVector::zero(v.basis, target.max(0) as usize)))
}

/// Brauer character of `v`: values on odd classes, zero entries dropped.
pub fn brauer_of(v: &CharVector) -> Result<BTreeMap<Partition, Scalar>> {
    let mut out: BTreeMap<Partition, Scalar> = BTreeMap::new();
    for (l, c) in &v.terms {
        let row = match l {
            CharLabel::Specht(lambda) => linear_brauer(lambda),
            CharLabel::Spin(alpha) => spin_brauer(alpha)?,
        };
        for (nu, x) in as_map(&row) {
            *out.entry(nu).or_insert_with(Scalar::zero) += &(c * &x);
        }
    }
    out.retain(|_, x| !x.is_zero());
    Ok(out)
}

fn fmt_coeff(c: &Scalar) -> String {
    if *c == Scalar::one() {
        return String::new();
    }
    let body = c.to_string().replace('-', "−");
    if !c.rational_part().is_zero() && !c.sqrt2_part().is_zero() {
        format!("({body})·")
    } else {
        format!("{body}·")
    }
}

pub(crate) fn fmt_label(l: &CharLabel) -> String {
    match l {
        CharLabel::Specht(p) if p.is_empty() => "[∅]".into(),
        CharLabel::Spin(a) if a.is_empty() => "⟨⟨∅⟩⟩".into(),
        other => other.to_string(),
    }
}

/// `−[5,2,2]`, `2·⟨⟨5,3,1⟩⟩ + ⟨⟨6,2,1⟩⟩`, `0`.
impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms().enumerate() {
            let neg = !c.is_positive();
            let mag = if neg { -c } else { c.clone() };
            let op = match (i, neg) {
                (0, false) => "",
                (0, true) => "−",
                (_, false) => " + ",
                (_, true) => " − ",
            };
            write!(f, "{op}{}{}", fmt_coeff(&mag), fmt_label(l))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    label: String,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct CharVectorRepr {
    #[serde(flatten)]
    basis: Basis,
    n: usize,
    terms: Vec<Term>,
}

impl Serialize for CharVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(l, c)| Term {
                label: match l {
                    CharLabel::Specht(p) => p.to_string(),
                    CharLabel::Spin(a) => a.to_string(),
                },
                coeff: c.clone(),
            })
            .collect();
        CharVectorRepr { basis: self.basis, n: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CharVectorRepr::deserialize(d)?;
        let mut v = CharVector::zero(repr.basis, repr.n);
        for t in repr.terms {
            let label = match repr.basis {
                Basis::Linear { .. } => CharLabel::Specht(t.label.parse().map_err(D::Error::custom)?),
                Basis::Spin => CharLabel::Spin(t.label.parse().map_err(D::Error::custom)?),
            };
            v.add_term(label, &t.coeff).map_err(D::Error::custom)?;
        }
        Ok(v)
    }
}

/// A pair of partitions `(λ⁽⁰⁾, λ⁽¹⁾)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub comp0: Partition,
    pub comp1: Partition,
}

impl Bipartition {
    pub fn new(comp0: Partition, comp1: Partition) -> Self {
        Bipartition { comp0, comp1 }
    }

    pub fn size(&self) -> usize {
        self.comp0.size() + self.comp1.size()
    }

    /// All bipartitions of `n`.
    pub fn all(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            for a in crate::partition::partitions(k) {
                for b in crate::partition::partitions(n - k) {
                    out.push(Bipartition::new(a.clone(), b));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.comp0, self.comp1)
    }
}

/// `big ∖ small` has at most one node in each column.
pub fn is_horizontal_strip(big: &[usize], small: &[usize]) -> bool {
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let rows = big.len().max(small.len());
    (0..rows).all(|i| at(small, i) <= at(big, i) && at(big, i + 1) <= at(small, i))
}

/// `big ∖ small` has at most one node in each row.
pub fn is_vertical_strip(big: &[usize], small: &[usize]) -> bool {
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let rows = big.len().max(small.len());
    (0..rows).all(|i| at(small, i) <= at(big, i) && at(big, i) <= at(small, i) + 1)
}

/// `bλ ⇀ bμ`.
pub fn harpoon(l: &Bipartition, m: &Bipartition) -> bool {
    is_horizontal_strip(m.comp0.parts(), l.comp0.parts())
        && is_vertical_strip(m.comp1.parts(), l.comp1.parts())
}

/// Every `ζ` with `a ∖ ζ` and `b ∖ ζ` both horizontal strips.
fn common_horizontal(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let rows = a.len().min(b.len());
    let ranges: Vec<(usize, usize)> = (0..rows)
        .map(|i| (at(a, i + 1).max(at(b, i + 1)), at(a, i).min(at(b, i))))
        .collect();
    if ranges.iter().any(|(lo, hi)| lo > hi) || (a.len().max(b.len()) > rows + 1) {
        return vec![];
    }
    // rows beyond the shorter partition: ζ_i = 0, so the longer one may have
    // at most one extra row, of length ≤ ζ_{rows}
    let mut out = vec![vec![]];
    for (lo, hi) in ranges {
        let mut next = Vec::new();
        for z in &out {
            for v in lo..=hi {
                let mut z2: Vec<usize> = z.clone();
                z2.push(v);
                next.push(z2);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|mut z| {
            while z.last() == Some(&0) {
                z.pop();
            }
            z
        })
        .filter(|z| is_horizontal_strip(a, z) && is_horizontal_strip(b, z))
        .collect()
}

fn common_horizontal_partitions(a: &Partition, b: &Partition) -> Vec<Partition> {
    common_horizontal(a.parts(), b.parts())
        .into_iter()
        .map(Partition::from_unsorted)
        .collect()
}

fn common_vertical_partitions(a: &Partition, b: &Partition) -> Vec<Partition> {
    common_horizontal_partitions(&a.conjugate(), &b.conjugate())
        .into_iter()
        .map(|p| p.conjugate())
        .collect()
}

/// `interm(bλ, bμ) = {bν : bλ ↼ bν ⇀ bμ}`.
pub fn interm(l: &Bipartition, m: &Bipartition) -> BTreeSet<Bipartition> {
    let zeros = common_horizontal_partitions(&l.comp0, &m.comp0);
    let ones = common_vertical_partitions(&l.comp1, &m.comp1);
    let mut out = BTreeSet::new();
    for a in &zeros {
        for b in &ones {
            out.insert(Bipartition::new(a.clone(), b.clone()));
        }
    }
    out
}

/// `Σ_{bν ∈ interm(bλ, bμ)} (−1)^{|bμ ∖ bν|}`.
pub fn interm_sum(l: &Bipartition, m: &Bipartition) -> i64 {
    interm(l, m)
        .iter()
        .map(|nu| if (m.size() - nu.size()).is_multiple_of(2) { 1 } else { -1 })
        .sum()
}

/// Strict `ζ` from which both `η` and `θ` arise by adding nodes in distinct columns.
pub fn interm0(eta: &StrictPartition, theta: &StrictPartition) -> BTreeSet<StrictPartition> {
    common_horizontal(eta.parts(), theta.parts())
        .into_iter()
        .filter_map(|z| StrictPartition::new(z).ok())
        .collect()
}

/// Partitions `φ` from which both `σ` and `τ` arise by adding nodes in distinct rows.
pub fn interm1(sigma: &Partition, tau: &Partition) -> BTreeSet<Partition> {
    common_vertical_partitions(sigma, tau).into_iter().collect()
}

/// `K(σ, τ) = |interm1(σ, τ)|`.
pub fn k_count(sigma: &Partition, tau: &Partition) -> usize {
    interm1(sigma, tau).len()
}

/// `kom(η, θ)` by the column rule; requires `θ ⊆ η`. Agrees with [`kom`]
/// when `η ∖ θ` has at most one node per column.
pub fn kom_columns(eta: &StrictPartition, theta: &StrictPartition) -> Result<usize> {
    if !eta.as_partition().contains(&theta.as_partition()) {
        return Err(Error::Domain(format!("{theta} is not contained in {eta}")));
    }
    let cols: BTreeSet<usize> = eta
        .nodes()
        .filter(|n| theta.part(n.row) < n.col)
        .map(|n| n.col)
        .collect();
    let top = cols.iter().next_back().copied().unwrap_or(0);
    Ok((1..=top)
        .filter(|c| cols.contains(c) != cols.contains(&(c + 1)))
        .count())
}

/// `kom(η, θ)` as the number of integers that are parts of exactly one of them.
pub fn kom(eta: &StrictPartition, theta: &StrictPartition) -> usize {
    eta.symmetric_difference_count(theta)
}

/// The summand of `B(η, θ)` indexed by `ζ`.
pub fn b_summand(zeta: &StrictPartition, eta: &StrictPartition, theta: &StrictPartition) -> Scalar {
    let s = sign((theta.size() - zeta.size()) as i64);
    &s * &sqrt2_pow((kom(eta, zeta) + kom(theta, zeta)) as i64)
}

/// `B(η, θ)` summed over `interm0(η, θ)`.
pub fn b_bruteforce(eta: &StrictPartition, theta: &StrictPartition) -> Scalar {
    let mut s = Scalar::zero();
    for z in interm0(eta, theta) {
        s += &b_summand(&z, eta, theta);
    }
    s
}

/// Closed form of `B(η, θ)`.
pub fn b_closed(eta: &StrictPartition, theta: &StrictPartition) -> Scalar {
    let d = theta.size() as i64 - eta.size() as i64;
    let r = eta.parts().iter().filter(|&&p| p as i64 > d.abs()).count() as i64;
    if theta == eta {
        return sign(r);
    }
    if d < 0 && eta.has_part((-d) as usize) && *theta == eta.parts_minus(&single(-d)) {
        return &sign(r) * &Scalar::sqrt2();
    }
    if d > 0 && !eta.has_part(d as usize) && eta.union(&single(d)).ok().as_ref() == Some(theta) {
        return &sign(r + d) * &Scalar::sqrt2();
    }
    Scalar::zero()
}

fn single(k: i64) -> StrictPartition {
    StrictPartition::new(vec![k as usize]).expect("single positive part")
}

/// Drops the first column of a strict partition.
pub fn remove_first_column(alpha: &StrictPartition) -> StrictPartition {
    StrictPartition::from_unsorted(alpha.parts().iter().filter(|&&p| p > 1).map(|p| p - 1).collect())
        .expect("strict parts stay strict")
}

/// `B(η, θ)` by stripping first columns one at a time.
pub fn b_by_columns(eta: &StrictPartition, theta: &StrictPartition) -> Scalar {
    if eta.is_empty() && theta.is_empty() {
        return Scalar::one();
    }
    let (e, t) = (eta.as_partition(), theta.as_partition());
    let d1 = e.column(1) as i64 - t.column(1) as i64;
    let d2 = e.column(2) as i64 - t.column(2) as i64;
    let cols = e.part(1).max(t.part(1));
    if (1..=cols).any(|c| (e.column(c) as i64 - t.column(c) as i64).abs() > 1) {
        return Scalar::zero();
    }
    let factor = match (d1, d2) {
        (1, 1) => Scalar::one(),
        (-1, -1) => Scalar::from_int(-1),
        (1, 0) => Scalar::sqrt2(),
        (-1, 0) => -Scalar::sqrt2(),
        (0, 0) if e.column(1) == e.column(2) => Scalar::one(),
        (0, 0) => Scalar::from_int(-1),
        _ => return Scalar::zero(),
    };
    &factor * &b_by_columns(&remove_first_column(eta), &remove_first_column(theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{part, partitions, strict, strict_partitions};

    fn lin(v: &[(&[usize], i64)]) -> CharVector {
        let n = v[0].0.iter().sum();
        let mut out = CharVector::zero(Basis::linear(), n);
        for (l, c) in v {
            out.add_term(CharLabel::Specht(part(l)), &Scalar::from_int(*c)).unwrap();
        }
        out
    }

    fn spn(v: &[(&[usize], Scalar)]) -> CharVector {
        let n = v[0].0.iter().sum();
        let mut out = CharVector::zero(Basis::Spin, n);
        for (l, c) in v {
            out.add_term(CharLabel::Spin(strict(l)), c).unwrap();
        }
        out
    }

    #[test]
    fn linear_divided_powers() {
        let v = CharVector::specht(&part(&[6, 3, 1, 1]));
        let got = apply_e(1, 2, &v);
        assert_eq!(got, lin(&[(&[6, 2, 1], 1), (&[5, 3, 1], 1), (&[5, 2, 1, 1], 1)]));
        assert_eq!(apply_e(1, 4, &v), CharVector::zero(Basis::linear(), 7));
        let e1 = apply_e(0, 1, &CharVector::specht(&part(&[1])));
        assert_eq!(e1.to_string(), "[∅]");
    }

    #[test]
    fn spin_divided_powers() {
        let v = CharVector::spin(&strict(&[6, 3, 2]));
        let want = spn(&[(&[5, 3, 1], Scalar::from_int(2)), (&[6, 2, 1], Scalar::one())]);
        assert_eq!(apply_e(1, 2, &v), want);
        let f = apply_f(1, 1, &CharVector::spin(&strict(&[5, 2, 1])));
        let want = spn(&[(&[6, 2, 1], Scalar::sqrt2()), (&[5, 3, 1], Scalar::sqrt2())]);
        assert_eq!(f, want);
    }

    #[test]
    fn branching_exponent_rules_agree() {
        for n in 1..=12 {
            for alpha in strict_partitions(n) {
                for eps in 0..2 {
                    for beta in spin_removals(&alpha, eps) {
                        assert_eq!(
                            spin_branch_exponent(&alpha, &beta),
                            spin_branch_exponent_by_columns(&alpha, &beta),
                            "{alpha} {beta}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn display() {
        let v = spn(&[(&[5, 3, 1], Scalar::from_int(2)), (&[6, 2, 1], Scalar::one())]);
        assert_eq!(v.to_string(), "⟨⟨6,2,1⟩⟩ + 2·⟨⟨5,3,1⟩⟩");
        let w = spn(&[(&[4, 3], -Scalar::sqrt2())]);
        assert_eq!(w.to_string(), "−√2·⟨⟨4,3⟩⟩");
        let u = spn(&[(&[2], Scalar::one() + Scalar::sqrt2())]);
        assert_eq!(u.to_string(), "(1+√2)·⟨⟨2⟩⟩");
        let x = spn(&[(&[2], Scalar::one() - Scalar::sqrt2())]);
        assert_eq!(x.to_string(), "−(−1+√2)·⟨⟨2⟩⟩");
        assert_eq!(CharVector::zero(Basis::Spin, 3).to_string(), "0");
    }

    #[test]
    fn runner_swap_examples() {
        let v = CharVector::specht(&part(&[6, 3, 1, 1]));
        assert_eq!(runner_swap(1, -2, &v).unwrap().to_string(), "−[5,2,2]");
        let w = CharVector::spin(&strict(&[6, 3, 2]));
        assert_eq!(runner_swap(1, -2, &w).unwrap().to_string(), "−⟨⟨6,2,1⟩⟩");
    }

    #[test]
    fn runner_swap_odd_p() {
        let p5 = |l: &[usize]| CharLabel::Specht(part(l));
        let v = CharVector::specht_mod(&part(&[9, 8, 5, 1, 1, 1, 1, 1]), 5);
        let up = apply_f(2, 1, &v);
        let mut want_up = CharVector::zero(Basis::Linear { p: 5 }, 28);
        want_up.add_term(p5(&[9, 8, 5, 1, 1, 1, 1, 1, 1]), &Scalar::one()).unwrap();
        want_up.add_term(p5(&[9, 9, 5, 1, 1, 1, 1, 1]), &Scalar::one()).unwrap();
        assert_eq!(up, want_up);
        let down = apply_e(2, 1, &v);
        assert_eq!(down, CharVector::specht_mod(&part(&[9, 8, 4, 1, 1, 1, 1, 1]), 5));
        let displayed = up.try_sub(&apply_f(2, 2, &down)).unwrap();
        assert_eq!(displayed.to_string(), "−[9,9,4,1,1,1,1,1,1]");
        // the sum with signs (−1)^{a+c} is the negative of the displayed one
        let got = runner_swap(2, 1, &v).unwrap();
        assert_eq!(got, displayed.scaled(&Scalar::from_int(-1)));
    }

    #[test]
    fn runner_swap_vanishes_beyond_net_addables() {
        use crate::abacus::n_eps;
        for n in 0..=8 {
            for l in partitions(n) {
                for eps in 0..2 {
                    let c = n_eps(&l, eps);
                    let v = CharVector::specht(&l);
                    for extra in 1..=2 {
                        assert!(runner_swap(eps, c + extra, &v).unwrap().is_zero(), "{l} {eps}");
                    }
                }
            }
        }
    }

    #[test]
    fn quot_red_examples() {
        let v = CharVector::specht(&part(&[6, 3]));
        assert_eq!(quot_red(1, -1, &v).unwrap().to_string(), "−[4,1,1,1]");
        let w = CharVector::spin(&strict(&[4, 3, 2]));
        assert_eq!(quot_red(1, -1, &w).unwrap().to_string(), "−√2·⟨⟨4,3⟩⟩");
    }

    #[test]
    fn adjointness() {
        for n in 1..=8 {
            let ls = partitions(n);
            for eps in 0..2 {
                for r in 1..=2 {
                    if r > n {
                        continue;
                    }
                    for l in &ls {
                        let down = apply_e(eps, r, &CharVector::specht(l));
                        for m in partitions(n - r) {
                            let up = apply_f(eps, r, &CharVector::specht(&m));
                            assert_eq!(down.coeff_specht(&m), up.coeff_specht(l));
                        }
                    }
                    for a in strict_partitions(n) {
                        let down = apply_e(eps, r, &CharVector::spin(&a));
                        for b in strict_partitions(n - r) {
                            let up = apply_f(eps, r, &CharVector::spin(&b));
                            assert_eq!(down.coeff_spin(&b), up.coeff_spin(&a));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn divided_powers_match_iterated_single_steps() {
        for n in 2..=8 {
            for a in strict_partitions(n) {
                for eps in 0..2 {
                    let v = CharVector::spin(&a);
                    let twice = apply_e(eps, 1, &apply_e(eps, 1, &v));
                    let div = apply_e(eps, 2, &v).scaled(&Scalar::from_int(2));
                    assert_eq!(twice.to_string(), div.to_string(), "{a}");
                }
            }
            for l in partitions(n) {
                for eps in 0..2 {
                    let v = CharVector::specht(&l);
                    let twice = apply_f(eps, 1, &apply_f(eps, 1, &v));
                    let div = apply_f(eps, 2, &v).scaled(&Scalar::from_int(2));
                    assert_eq!(twice.to_string(), div.to_string(), "{l}");
                }
            }
        }
    }

    #[test]
    fn strips() {
        assert!(is_horizontal_strip(&[3, 1], &[2]));
        assert!(is_horizontal_strip(&[2, 2], &[2, 1]));
        assert!(!is_horizontal_strip(&[2, 2], &[1, 1]));
        assert!(is_vertical_strip(&[2, 2], &[1, 1]));
        assert!(!is_vertical_strip(&[2], &[]));
    }

    #[test]
    fn interm_examples() {
        let l = Bipartition::new(Partition::empty(), part(&[1]));
        let m = Bipartition::new(part(&[1]), Partition::empty());
        let want: BTreeSet<_> = [Bipartition::default()].into_iter().collect();
        assert_eq!(interm(&l, &m), want);
        assert_eq!(k_count(&Partition::empty(), &Partition::empty()), 1);
        assert_eq!(k_count(&part(&[1]), &part(&[1])), 2);
        assert_eq!(kom(&strict(&[1]), &StrictPartition::empty()), 1);
        assert_eq!(kom_columns(&strict(&[1]), &StrictPartition::empty()).unwrap(), 1);
    }

    #[test]
    fn interm_matches_definition() {
        for n in 0..=4 {
            for m in 0..=4 {
                for l in Bipartition::all(n) {
                    for mu in Bipartition::all(m) {
                        let got = interm(&l, &mu);
                        let mut want = BTreeSet::new();
                        for k in 0..=n.min(m) {
                            for nu in Bipartition::all(k) {
                                if harpoon(&nu, &l) && harpoon(&nu, &mu) {
                                    want.insert(nu);
                                }
                            }
                        }
                        assert_eq!(got, want, "{l} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn kom_rules_agree() {
        for n in 0..=10 {
            for eta in strict_partitions(n) {
                for k in 0..=n {
                    for theta in strict_partitions(k) {
                        if is_horizontal_strip(eta.parts(), theta.parts()) {
                            let c = kom_columns(&eta, &theta).unwrap();
                            assert_eq!(c, kom(&eta, &theta), "{eta} {theta}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn b_values() {
        let e = StrictPartition::empty();
        assert_eq!(b_bruteforce(&e, &e), Scalar::one());
        assert_eq!(b_bruteforce(&strict(&[1]), &e), Scalar::sqrt2());
        assert_eq!(b_closed(&strict(&[1]), &e), Scalar::sqrt2());
    }

    #[test]
    fn b_closed_matches_bruteforce() {
        let all: Vec<StrictPartition> = (0..=8).flat_map(strict_partitions).collect();
        for eta in &all {
            for theta in &all {
                let b = b_bruteforce(eta, theta);
                assert_eq!(b, b_closed(eta, theta), "{eta} {theta}");
                assert_eq!(b, b_by_columns(eta, theta), "{eta} {theta}");
            }
        }
    }

    #[test]
    fn column_removal_pair() {
        let eta = strict(&[7, 6, 2, 1]);
        let theta = strict(&[6, 5, 3, 1]);
        let zs: Vec<_> = interm0(&eta, &theta).into_iter().rev().collect();
        let summands: Vec<Scalar> = zs.iter().map(|z| b_summand(z, &eta, &theta)).collect();
        let want: Vec<Scalar> = [-4, 8, -4, 8, -16, 8, -4, 8, -4].into_iter().map(Scalar::from_int).collect();
        assert_eq!(zs[0], strict(&[6, 5, 2, 1]));
        assert_eq!(summands, want);
        let (ce, ct) = (remove_first_column(&eta), remove_first_column(&theta));
        assert_eq!((ce.clone(), ct.clone()), (strict(&[6, 5, 1]), strict(&[5, 4, 2])));
        for delta in interm0(&ce, &ct) {
            let lifted: Scalar = zs
                .iter()
                .filter(|z| remove_first_column(z) == delta)
                .fold(Scalar::zero(), |acc, z| acc + b_summand(z, &eta, &theta));
            assert_eq!(lifted, -b_summand(&delta, &ce, &ct), "{delta}");
        }
        assert_eq!(b_bruteforce(&eta, &theta), -b_bruteforce(&ce, &ct));
        assert!(b_bruteforce(&eta, &theta).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let v = quot_red(1, -1, &CharVector::spin(&strict(&[4, 3, 2]))).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        let back: CharVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
