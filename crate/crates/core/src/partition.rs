//! Partitions, strict partitions and the Young-diagram combinatorics that
//! does not depend on residues: conjugation, doubles, ladders and
//! regularisation, dominance, staircases.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A node `(row, col)` of a Young diagram, both 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }

    /// `(col − row) mod p`.
    pub fn residue(&self, p: usize) -> usize {
        (self.col as i64 - self.row as i64).rem_euclid(p as i64) as usize
    }

    /// `⌊col/2⌋ mod 2`.
    pub fn spin_residue(&self) -> usize {
        (self.col / 2) % 2
    }

    /// Index `l` of the ladder `{(r,c) : r + c = l + 1}` containing the node.
    pub fn ladder(&self) -> usize {
        self.row + self.col - 1
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

/// A strictly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<usize>);

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`th part, 1-indexed, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// Length of column `c` (1-indexed).
    pub fn column(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains_node(&self, n: Node) -> bool {
        self.part(n.row) >= n.col
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |c| Node::new(i + 1, c)))
    }

    /// `self ∖ other` as a node list; requires `other ⊆ self`.
    pub fn skew_nodes(&self, other: &Partition) -> Vec<Node> {
        self.nodes().filter(|n| !other.contains_node(*n)).collect()
    }

    pub fn is_two_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_strict(&self) -> bool {
        self.is_two_regular()
    }

    /// Diagram intersection `self ∩ other`.
    pub fn intersect(&self, other: &Partition) -> Partition {
        Partition(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Componentwise sum `self + other`.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((1..=n).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// `k·self`.
    pub fn scale(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// `self ⊔ other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }

    /// Hook lengths of every node, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.nodes()
            .map(|n| {
                let arm = self.part(n.row) - n.col;
                let leg = conj.part(n.col) - n.row;
                arm + leg + 1
            })
            .collect()
    }
}

impl StrictPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || !parts.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::Domain(format!("not a strict partition: {parts:?}")));
        }
        Ok(StrictPartition(parts))
    }

    /// Sorts and validates distinctness.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        StrictPartition::new(parts)
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn has_part(&self, p: usize) -> bool {
        self.0.contains(&p)
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    /// Number of even parts.
    pub fn even_parts(&self) -> usize {
        self.0.iter().filter(|p| *p % 2 == 0).count()
    }

    pub fn odd_subpartition(&self) -> StrictPartition {
        StrictPartition(self.0.iter().copied().filter(|p| p % 2 == 1).collect())
    }

    pub fn even_subpartition(&self) -> StrictPartition {
        StrictPartition(self.0.iter().copied().filter(|p| p % 2 == 0).collect())
    }

    /// `self ⊔ other`; fails when a part is shared.
    pub fn union(&self, other: &StrictPartition) -> Result<StrictPartition> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        StrictPartition::from_unsorted(v)
    }

    /// `self ∖ other`: the parts of `self` which are not parts of `other`.
    pub fn parts_minus(&self, other: &StrictPartition) -> StrictPartition {
        StrictPartition(
            self.0
                .iter()
                .copied()
                .filter(|p| !other.has_part(*p))
                .collect(),
        )
    }

    /// `2·self` as a strict partition.
    pub fn doubled_parts(&self) -> StrictPartition {
        StrictPartition(self.0.iter().map(|p| 2 * p).collect())
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |c| Node::new(i + 1, c)))
    }

    /// Number of integers that are parts of exactly one of `self`, `other`.
    pub fn symmetric_difference_count(&self, other: &StrictPartition) -> usize {
        self.0.iter().filter(|p| !other.has_part(**p)).count()
            + other.0.iter().filter(|p| !self.has_part(**p)).count()
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        StrictPartition::new(p.0)
    }
}

fn format_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "-");
    }
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "{}", s.join(","))
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            match t.parse::<usize>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::Parse(format!("bad part {t:?} in {s:?}"))),
            }
        })
        .collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_parts(&self.0, f)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_parts(&self.0, f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?).map_err(|_| Error::Parse(format!("{s:?} is not weakly decreasing")))
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
            .map_err(|_| Error::Parse(format!("{s:?} is not strictly decreasing")))
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(Partition);
string_serde!(StrictPartition);

/// Shorthand used throughout the tests: `part(&[3, 1])`.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

/// Shorthand for strict partition literals.
pub fn strict(parts: &[usize]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).expect("valid strict partition literal")
}

fn gen_partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, allow: &dyn Fn(usize, &[usize]) -> bool) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        if !allow(p, prefix) {
            continue;
        }
        prefix.push(p);
        gen_partitions(n - p, p, prefix, out, allow);
        prefix.pop();
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    gen_partitions(n, n, &mut Vec::new(), &mut out, &|_, _| true);
    out.into_iter().map(Partition).collect()
}

/// All strict partitions of `n`, lexicographically descending.
pub fn strict_partitions(n: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    gen_partitions(n, n, &mut Vec::new(), &mut out, &|p, prefix| {
        prefix.last().is_none_or(|&l| p < l)
    });
    out.into_iter().map(StrictPartition).collect()
}

/// Partitions of `n` into odd parts (the 2-regular class labels),
/// lexicographically descending.
pub fn odd_part_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    gen_partitions(n, n, &mut Vec::new(), &mut out, &|p, _| p % 2 == 1);
    out.into_iter().map(Partition).collect()
}

/// The double: odd parts `2k+1 ↦ (k+1, k)`, even parts `2k ↦ (k, k)`.
pub fn double(alpha: &StrictPartition) -> Partition {
    let mut v = Vec::with_capacity(2 * alpha.len());
    for &a in alpha.parts() {
        v.push(a.div_ceil(2));
        v.push(a / 2);
    }
    Partition::from_unsorted(v)
}

/// Occupancy of each ladder: entry `l-1` counts nodes with `r + c = l + 1`.
pub fn ladder_counts(lambda: &Partition) -> Vec<usize> {
    let mut counts = Vec::new();
    for n in lambda.nodes() {
        let l = n.ladder();
        if counts.len() < l {
            counts.resize(l, 0);
        }
        counts[l - 1] += 1;
    }
    counts
}

/// The 2-regularisation: every node slides to the top of its ladder.
pub fn regularize2(lambda: &Partition) -> Partition {
    let counts = ladder_counts(lambda);
    let rows = counts.iter().copied().max().unwrap_or(0);
    let mut row_len = vec![0usize; rows];
    // ladder l meets rows 1..=l; its top k positions are the filled ones
    for &k in &counts {
        for len in row_len.iter_mut().take(k) {
            *len += 1;
        }
    }
    let reg = Partition::from_unsorted(row_len);
    debug_assert_eq!(ladder_counts(&reg), counts);
    reg
}

/// Dominance order; fails when the sizes differ.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0usize, 0usize);
    for i in 1..=len {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl < sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Counts of residue-0 and residue-1 nodes.
pub fn content(lambda: &Partition) -> (usize, usize) {
    let ones = lambda.nodes().filter(|n| n.residue(2) == 1).count();
    (lambda.size() - ones, ones)
}

/// Counts of spin-residue-0 and spin-residue-1 nodes.
pub fn spin_content(alpha: &StrictPartition) -> (usize, usize) {
    let ones = alpha.nodes().filter(|n| n.spin_residue() == 1).count();
    (alpha.size() - ones, ones)
}

/// Residue multiset for an arbitrary modulus, keyed by residue.
pub fn content_mod(lambda: &Partition, p: usize) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for n in lambda.nodes() {
        *m.entry(n.residue(p)).or_insert(0) += 1;
    }
    m
}

/// The 2-core `δ_r = (r, r−1, …, 1)`.
pub fn staircase(r: usize) -> Partition {
    Partition((1..=r).rev().collect())
}

/// The 4-bar-core `γ̄_r` with largest part `2r − 1`.
pub fn bar_staircase(r: usize) -> StrictPartition {
    if r == 0 {
        return StrictPartition::empty();
    }
    let mut parts = Vec::new();
    let mut p = 2 * r as i64 - 1;
    while p > 0 {
        parts.push(p as usize);
        p -= 4;
    }
    StrictPartition(parts)
}

/// If `lambda` is a staircase `δ_r`, returns `r`.
pub fn staircase_index(lambda: &Partition) -> Option<usize> {
    let r = lambda.len();
    (*lambda == staircase(r)).then_some(r)
}

/// If `alpha` is a 4-bar-core `γ̄_r`, returns `r`.
pub fn bar_staircase_index(alpha: &StrictPartition) -> Option<usize> {
    if alpha.is_empty() {
        return Some(0);
    }
    let r = alpha.part(1).div_ceil(2);
    (*alpha == bar_staircase(r) && alpha.part(1) % 2 == 1).then_some(r)
}

/// Largest `l` such that every node of ladder `l` lies in `dbl(α)`.
pub fn flad(alpha: &StrictPartition) -> usize {
    let d = double(alpha);
    let mut l = 0;
    loop {
        let next = l + 1;
        if (1..=next).all(|r| d.contains_node(Node::new(r, next + 1 - r))) {
            l = next;
        } else {
            return l;
        }
    }
}

/// Largest `l` such that ladder `l` meets `dbl(α)`.
pub fn tlad(alpha: &StrictPartition) -> usize {
    double(alpha).nodes().map(|n| n.ladder()).max().unwrap_or(0)
}
