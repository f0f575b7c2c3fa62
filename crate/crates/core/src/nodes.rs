//! Removable and addable nodes of a given residue, and their spin analogues.
//!
//! Linear residues are `(c − r) mod p`. Spin residues are `⌊c/2⌋ mod 2`, so
//! the spin residue is constant on column pairs `{2k, 2k+1}` and a single
//! row can gain or lose two nodes at once.

use std::collections::BTreeSet;

use crate::partition::{Node, Partition, StrictPartition};

/// Removable nodes of residue `eps` modulo `p`, top row first.
pub fn removable_nodes_mod(lambda: &Partition, eps: usize, p: usize) -> Vec<Node> {
    (1..=lambda.len())
        .filter(|&r| lambda.part(r) > lambda.part(r + 1))
        .map(|r| Node::new(r, lambda.part(r)))
        .filter(|n| n.residue(p) == eps)
        .collect()
}

/// Addable nodes of residue `eps` modulo `p`, top row first.
pub fn addable_nodes_mod(lambda: &Partition, eps: usize, p: usize) -> Vec<Node> {
    (1..=lambda.len() + 1)
        .filter(|&r| r == 1 || lambda.part(r - 1) > lambda.part(r))
        .map(|r| Node::new(r, lambda.part(r) + 1))
        .filter(|n| n.residue(p) == eps)
        .collect()
}

pub fn removable_nodes(lambda: &Partition, eps: usize) -> Vec<Node> {
    removable_nodes_mod(lambda, eps, 2)
}

pub fn addable_nodes(lambda: &Partition, eps: usize) -> Vec<Node> {
    addable_nodes_mod(lambda, eps, 2)
}

/// Removes the given nodes; each must be removable and in a distinct row.
pub fn remove_nodes(lambda: &Partition, nodes: &[Node]) -> Partition {
    let mut parts = lambda.parts().to_vec();
    for n in nodes {
        parts[n.row - 1] -= 1;
    }
    Partition::from_unsorted(parts)
}

/// Adds the given nodes; each must be addable and in a distinct row.
pub fn add_nodes(lambda: &Partition, nodes: &[Node]) -> Partition {
    let mut parts = lambda.parts().to_vec();
    for n in nodes {
        if n.row > parts.len() {
            parts.resize(n.row, 0);
        }
        parts[n.row - 1] += 1;
    }
    Partition::from_unsorted(parts)
}

/// `λ^{−ε}`: remove every removable `eps`-node at once.
pub fn restrict_all(lambda: &Partition, eps: usize) -> Partition {
    remove_nodes(lambda, &removable_nodes(lambda, eps))
}

fn residue_run_ok(from_col: usize, to_col: usize, eps: usize) -> bool {
    (from_col..=to_col).all(|c| (c / 2) % 2 == eps)
}

fn extend_spin(
    rows: &[(usize, Vec<usize>)],
    idx: usize,
    prev: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if idx == rows.len() {
        out.push(acc.clone());
        return;
    }
    for &v in &rows[idx].1 {
        if idx > 0 && !(v == 0 || prev > v) {
            continue;
        }
        acc.push(v);
        extend_spin(rows, idx + 1, v, acc, out);
        acc.pop();
    }
}

/// Every strict `β ⊊ α` obtained by removing a non-empty set of
/// spin-residue-`eps` nodes, with row-wise containment.
pub fn spin_removals(alpha: &StrictPartition, eps: usize) -> Vec<StrictPartition> {
    let rows: Vec<(usize, Vec<usize>)> = alpha
        .parts()
        .iter()
        .map(|&a| {
            let mut opts = vec![a];
            for t in 1..=2.min(a) {
                if residue_run_ok(a - t + 1, a, eps) {
                    opts.push(a - t);
                }
            }
            (a, opts)
        })
        .collect();
    let mut out = Vec::new();
    extend_spin(&rows, 0, usize::MAX, &mut Vec::new(), &mut out);
    out.into_iter()
        .filter(|v| v.as_slice() != alpha.parts())
        .map(|v| StrictPartition::new(v).expect("strictness checked during enumeration"))
        .collect()
}

/// Every strict `β ⊋ α` obtained by adding a non-empty set of
/// spin-residue-`eps` nodes.
pub fn spin_additions(alpha: &StrictPartition, eps: usize) -> Vec<StrictPartition> {
    let mut base = alpha.parts().to_vec();
    base.push(0);
    let rows: Vec<(usize, Vec<usize>)> = base
        .iter()
        .map(|&a| {
            let mut opts = vec![a];
            for t in 1..=2 {
                if residue_run_ok(a + 1, a + t, eps) {
                    opts.push(a + t);
                }
            }
            (a, opts)
        })
        .collect();
    let mut out = Vec::new();
    extend_spin(&rows, 0, usize::MAX, &mut Vec::new(), &mut out);
    let mut res: Vec<StrictPartition> = out
        .into_iter()
        .map(|v| StrictPartition::new(v).expect("strictness checked during enumeration"))
        .filter(|b| b != alpha)
        .collect();
    res.sort();
    res.dedup();
    res
}

fn skew(big: &StrictPartition, small: &StrictPartition) -> Vec<Node> {
    big.nodes()
        .filter(|n| small.part(n.row) < n.col)
        .collect()
}

/// Nodes of `α` removable (possibly jointly) to leave a strict partition.
pub fn spin_removable_nodes(alpha: &StrictPartition, eps: usize) -> Vec<Node> {
    let set: BTreeSet<Node> = spin_removals(alpha, eps)
        .iter()
        .flat_map(|b| skew(alpha, b))
        .collect();
    set.into_iter().collect()
}

/// Nodes outside `α` addable (possibly jointly) to give a strict partition.
pub fn spin_addable_nodes(alpha: &StrictPartition, eps: usize) -> Vec<Node> {
    let set: BTreeSet<Node> = spin_additions(alpha, eps)
        .iter()
        .flat_map(|b| skew(b, alpha))
        .collect();
    set.into_iter().collect()
}

/// `α^{−ε}`: remove all spin-removable `eps`-nodes at once.
pub fn spin_restrict_all(alpha: &StrictPartition, eps: usize) -> StrictPartition {
    let removable = spin_removable_nodes(alpha, eps);
    let mut parts = alpha.parts().to_vec();
    for n in &removable {
        parts[n.row - 1] -= 1;
    }
    StrictPartition::new(parts).expect("removing all spin-removable nodes leaves a strict partition")
}
