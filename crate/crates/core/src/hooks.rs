//! Rim-hooks, bars, and the cores and weights obtained by stripping them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::{Partition, StrictPartition};

/// One way of removing a rim-hook.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HookRemoval {
    pub result: Partition,
    /// Rows spanned by the hook, minus one.
    pub leg: usize,
    pub length: usize,
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let r = lambda.len();
    (1..=r).map(|i| lambda.part(i) + r - i).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let r = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, b)| b + i + 1 - r).collect())
}

/// All removable `k`-rim-hooks, with their leg lengths.
pub fn rim_hooks(lambda: &Partition, k: usize) -> Vec<HookRemoval> {
    assert!(k >= 1, "hook length must be positive");
    let beta = beta_set(lambda);
    let set: BTreeSet<usize> = beta.iter().copied().collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || set.contains(&(b - k)) {
            continue;
        }
        let leg = set.range(b - k + 1..b).count();
        let mut moved = beta.clone();
        moved[i] = b - k;
        out.push(HookRemoval {
            result: from_beta(moved),
            leg,
            length: k,
        });
    }
    out.sort();
    out
}

/// `k`-core and `k`-weight, stripping hooks in a fixed order.
pub fn k_core_weight(lambda: &Partition, k: usize) -> (Partition, usize) {
    let mut cur = lambda.clone();
    let mut w = 0;
    while let Some(h) = rim_hooks(&cur, k).into_iter().next() {
        cur = h.result;
        w += 1;
    }
    (cur, w)
}

pub fn k_core(lambda: &Partition, k: usize) -> Partition {
    k_core_weight(lambda, k).0
}

pub fn k_weight(lambda: &Partition, k: usize) -> usize {
    k_core_weight(lambda, k).1
}

pub fn two_core(lambda: &Partition) -> Partition {
    k_core(lambda, 2)
}

fn require_odd(k: usize) -> Result<()> {
    if k.is_multiple_of(2) {
        return Err(Error::Domain(format!("bar length {k} must be odd")));
    }
    Ok(())
}

/// `rb(α, k)`: strict partitions left after removing one `k`-bar.
pub fn bars(alpha: &StrictPartition, k: usize) -> Result<Vec<StrictPartition>> {
    require_odd(k)?;
    let parts = alpha.parts();
    let mut out = BTreeSet::new();
    for (i, &a) in parts.iter().enumerate() {
        if a == k {
            out.insert(without(parts, &[i]));
        } else if a > k && !alpha.has_part(a - k) {
            let mut v = parts.to_vec();
            v[i] = a - k;
            out.insert(StrictPartition::from_unsorted(v).expect("distinct after checking a-k"));
        }
        for (j, &b) in parts.iter().enumerate().skip(i + 1) {
            if a + b == k {
                out.insert(without(parts, &[i, j]));
            }
        }
    }
    Ok(out.into_iter().rev().collect())
}

fn without(parts: &[usize], idx: &[usize]) -> StrictPartition {
    StrictPartition::new(
        parts
            .iter()
            .enumerate()
            .filter(|(i, _)| !idx.contains(i))
            .map(|(_, &p)| p)
            .collect(),
    )
    .expect("sub-list of a strict partition")
}

/// `k`-bar-core and `k`-bar-weight for odd `k`.
pub fn odd_bar_core(alpha: &StrictPartition, k: usize) -> Result<(StrictPartition, usize)> {
    require_odd(k)?;
    let mut cur = alpha.clone();
    let mut w = 0;
    while let Some(next) = bars(&cur, k)?.into_iter().next() {
        cur = next;
        w += 1;
    }
    Ok((cur, w))
}

/// The unique largest bar of odd length: its length and what remains.
pub fn largest_odd_bar(alpha: &StrictPartition) -> Option<(usize, StrictPartition)> {
    let parts = alpha.parts();
    let odd = parts.iter().position(|p| p % 2 == 1);
    let even = parts.iter().position(|p| p % 2 == 0);
    match (odd, even) {
        (None, None) => None,
        (Some(i), None) => Some((parts[i], without(parts, &[i]))),
        (None, Some(_)) => {
            let mut v = parts.to_vec();
            let len = v[0] - 1;
            v[0] = 1;
            Some((len, StrictPartition::from_unsorted(v).expect("1 is not an even part")))
        }
        (Some(i), Some(j)) => Some((parts[i] + parts[j], without(parts, &[i, j]))),
    }
}

/// A single 4-bar-core move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FourBarMove {
    DeleteEven(usize),
    DeletePair(usize, usize),
    ShortenOdd(usize),
}

/// Every move available from `alpha`.
pub fn four_bar_moves(alpha: &StrictPartition) -> Vec<FourBarMove> {
    let parts = alpha.parts();
    let mut moves = Vec::new();
    for (i, &a) in parts.iter().enumerate() {
        if a % 2 == 0 {
            moves.push(FourBarMove::DeleteEven(a));
        }
        for &b in &parts[i + 1..] {
            if (a + b) % 4 == 0 {
                moves.push(FourBarMove::DeletePair(a, b));
            }
        }
        if a % 2 == 1 && a > 4 && !alpha.has_part(a - 4) {
            moves.push(FourBarMove::ShortenOdd(a));
        }
    }
    moves
}

pub fn apply_four_bar_move(alpha: &StrictPartition, m: FourBarMove) -> StrictPartition {
    let mut v = alpha.parts().to_vec();
    match m {
        FourBarMove::DeleteEven(a) => v.retain(|&p| p != a),
        FourBarMove::DeletePair(a, b) => v.retain(|&p| p != a && p != b),
        FourBarMove::ShortenOdd(a) => {
            for p in v.iter_mut() {
                if *p == a {
                    *p = a - 4;
                }
            }
        }
    }
    StrictPartition::from_unsorted(v).expect("4-bar moves preserve strictness")
}

/// 4-bar-core and 4-bar-weight (nodes removed divided by two).
pub fn four_bar_core(alpha: &StrictPartition) -> (StrictPartition, usize) {
    let mut cur = alpha.clone();
    while let Some(m) = four_bar_moves(&cur).into_iter().next() {
        cur = apply_four_bar_move(&cur, m);
    }
    debug_assert!(crate::partition::bar_staircase_index(&cur).is_some());
    let w = (alpha.size() - cur.size()) / 2;
    (cur, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{bar_staircase, bar_staircase_index, part, partitions, staircase, strict, strict_partitions};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn three_hook_of_21() {
        assert_eq!(
            rim_hooks(&part(&[2, 1]), 3),
            vec![HookRemoval { result: Partition::empty(), leg: 1, length: 3 }]
        );
        assert!(rim_hooks(&part(&[2, 1]), 2).is_empty());
    }

    #[test]
    fn cores_and_weights() {
        assert_eq!(k_core_weight(&part(&[3, 1]), 2), (Partition::empty(), 2));
        assert_eq!(
            k_core_weight(&part(&[12, 9, 6, 3, 3, 1, 1, 1]), 2),
            (staircase(4), 13)
        );
        assert_eq!(k_core_weight(&staircase(5), 2), (staircase(5), 0));
    }

    #[test]
    fn hook_length_multiset_matches_hooks() {
        // the k-weight counts hooks of length divisible by k
        for n in 0..=10 {
            for l in partitions(n) {
                let hooks = l.hook_lengths();
                for k in 2..=5 {
                    let divisible = hooks.iter().filter(|h| *h % k == 0).count();
                    assert_eq!(k_weight(&l, k), divisible, "{l} k={k}");
                    let count = hooks.iter().filter(|h| **h == k).count();
                    assert_eq!(rim_hooks(&l, k).len(), count);
                }
            }
        }
    }

    fn random_core(l: &Partition, k: usize, rng: &mut StdRng) -> (Partition, usize) {
        let mut cur = l.clone();
        let mut w = 0;
        loop {
            let hs = rim_hooks(&cur, k);
            if hs.is_empty() {
                return (cur, w);
            }
            cur = hs[rng.gen_range(0..hs.len())].result.clone();
            w += 1;
        }
    }

    #[test]
    fn core_is_order_independent() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 0..=12 {
            for l in partitions(n) {
                for k in [2, 3, 5] {
                    let base = k_core_weight(&l, k);
                    for _ in 0..3 {
                        assert_eq!(random_core(&l, k, &mut rng), base);
                    }
                }
            }
        }
    }

    #[test]
    fn bar_enumeration() {
        assert_eq!(bars(&strict(&[5, 4]), 3).unwrap(), vec![strict(&[5, 1]), strict(&[4, 2])]);
        assert_eq!(bars(&strict(&[3]), 3).unwrap(), vec![StrictPartition::empty()]);
        assert!(bars(&strict(&[3]), 2).is_err());
        assert!(odd_bar_core(&strict(&[3]), 4).is_err());
    }

    #[test]
    fn largest_bars() {
        assert_eq!(
            largest_odd_bar(&strict(&[12, 8, 7, 4, 3, 2])),
            Some((19, strict(&[8, 4, 3, 2])))
        );
        assert_eq!(largest_odd_bar(&strict(&[5, 3])), Some((5, strict(&[3]))));
        assert_eq!(largest_odd_bar(&strict(&[6, 2])), Some((5, strict(&[2, 1]))));
        assert_eq!(largest_odd_bar(&StrictPartition::empty()), None);
    }

    #[test]
    fn largest_odd_bar_is_a_bar_of_maximal_odd_length() {
        for n in 1..=14 {
            for a in strict_partitions(n) {
                let (len, rest) = largest_odd_bar(&a).unwrap();
                assert!(bars(&a, len).unwrap().contains(&rest), "{a}");
                for k in (len + 1..=n).filter(|k| k % 2 == 1) {
                    assert!(bars(&a, k).unwrap().is_empty(), "{a} has a {k}-bar");
                }
            }
        }
    }

    fn random_bar_core(a: &StrictPartition, k: usize, rng: &mut StdRng) -> (StrictPartition, usize) {
        let mut cur = a.clone();
        let mut w = 0;
        loop {
            let bs = bars(&cur, k).unwrap();
            if bs.is_empty() {
                return (cur, w);
            }
            cur = bs[rng.gen_range(0..bs.len())].clone();
            w += 1;
        }
    }

    fn random_four_bar_core(a: &StrictPartition, rng: &mut StdRng) -> StrictPartition {
        let mut cur = a.clone();
        loop {
            let ms = four_bar_moves(&cur);
            if ms.is_empty() {
                return cur;
            }
            cur = apply_four_bar_move(&cur, ms[rng.gen_range(0..ms.len())]);
        }
    }

    #[test]
    fn bar_cores_are_order_independent() {
        let mut rng = StdRng::seed_from_u64(11);
        for n in 0..=14 {
            for a in strict_partitions(n) {
                for k in [1, 3, 5] {
                    let base = odd_bar_core(&a, k).unwrap();
                    for _ in 0..3 {
                        assert_eq!(random_bar_core(&a, k, &mut rng), base);
                    }
                }
                let (core, _) = four_bar_core(&a);
                assert!(bar_staircase_index(&core).is_some(), "{a} -> {core}");
                for _ in 0..3 {
                    assert_eq!(random_four_bar_core(&a, &mut rng), core);
                }
            }
        }
    }

    #[test]
    fn four_bar_cores() {
        assert_eq!(four_bar_core(&strict(&[12, 8, 7, 4, 3, 2])), (strict(&[7, 3]), 13));
        assert_eq!(four_bar_core(&strict(&[6, 2])), (StrictPartition::empty(), 4));
        for r in 0..=8 {
            assert_eq!(four_bar_core(&bar_staircase(r)), (bar_staircase(r), 0));
        }
    }
}
