//! Abacus displays, cores and quotients, and the runner-swap maps.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hooks::two_core;
use crate::nodes::{addable_nodes_mod, removable_nodes_mod, spin_addable_nodes, spin_removable_nodes};
use crate::partition::{staircase_index, Partition, StrictPartition};

/// An `r`-bead abacus display on `p` runners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusDisplay {
    runners: usize,
    beads: BTreeSet<usize>,
}

impl AbacusDisplay {
    /// Display of `lambda` with `r` beads on `p` runners.
    pub fn new(lambda: &Partition, r: usize, p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::Domain(format!("an abacus needs at least 2 runners, got {p}")));
        }
        if r < lambda.len() {
            return Err(Error::Domain(format!(
                "{r} beads cannot display {lambda} with {} parts",
                lambda.len()
            )));
        }
        let beads = (1..=r).map(|i| lambda.part(i) + r - i).collect();
        Ok(AbacusDisplay { runners: p, beads })
    }

    pub fn from_beads(beads: BTreeSet<usize>, p: usize) -> Self {
        AbacusDisplay { runners: p, beads }
    }

    pub fn runners(&self) -> usize {
        self.runners
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    pub fn beads(&self) -> &BTreeSet<usize> {
        &self.beads
    }

    pub fn decode(&self) -> Partition {
        let r = self.beads.len();
        Partition::from_unsorted(
            self.beads
                .iter()
                .rev()
                .enumerate()
                .map(|(i, b)| b + i + 1 - r)
                .collect(),
        )
    }

    /// Bead levels on runner `j`, lowest (largest) first.
    pub fn runner_levels(&self, j: usize) -> Vec<usize> {
        self.beads
            .iter()
            .rev()
            .filter(|b| *b % self.runners == j)
            .map(|b| b / self.runners)
            .collect()
    }

    pub fn runner_bead_count(&self, j: usize) -> usize {
        self.beads.iter().filter(|b| *b % self.runners == j).count()
    }

    /// The partition read from runner `j`: gaps above each bead, lowest bead first.
    pub fn runner_partition(&self, j: usize) -> Partition {
        let levels = self.runner_levels(j);
        let k = levels.len();
        Partition::from_unsorted(
            levels.iter().enumerate().map(|(i, l)| l + i + 1 - k).collect(),
        )
    }

    /// Swaps runners `i−1` and `i`.
    pub fn swap_runners(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.runners, "runner index out of range");
        let p = self.runners;
        let beads = self
            .beads
            .iter()
            .map(|&b| match b % p {
                x if x == i => b - 1,
                x if x == i - 1 => b + 1,
                _ => b,
            })
            .collect();
        AbacusDisplay { runners: p, beads }
    }

    /// Text grid: one line per level, one column per runner.
    pub fn render(&self) -> String {
        let top = self.beads.iter().next_back().map_or(0, |b| b / self.runners + 1);
        let mut s = String::new();
        for level in 0..top.max(1) {
            let row: Vec<&str> = (0..self.runners)
                .map(|j| {
                    if self.beads.contains(&(level * self.runners + j)) {
                        "o"
                    } else {
                        "."
                    }
                })
                .collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
        s
    }
}

/// 2-core and 2-quotient with bead count congruent to the length of the
/// 2-core, component `ε` read from runner `ε`.
pub fn two_quotient(lambda: &Partition) -> (Partition, Partition, Partition) {
    let core = two_core(lambda);
    let r = lambda.len() + (lambda.len() + core.len()) % 2;
    let d = AbacusDisplay::new(lambda, r, 2).expect("bead count covers all parts");
    (core, d.runner_partition(0), d.runner_partition(1))
}

/// `C(κ; q0, q1)`: the partition with 2-core `κ` and 2-quotient `(q0, q1)`.
pub fn from_core_quotient(kappa: &Partition, q0: &Partition, q1: &Partition) -> Result<Partition> {
    if staircase_index(kappa).is_none() {
        return Err(Error::Domain(format!("{kappa} is not a 2-core")));
    }
    let r = kappa.len() + 2 * (q0.len() + q1.len());
    let core = AbacusDisplay::new(kappa, r, 2)?;
    let mut beads = BTreeSet::new();
    for (eps, q) in [(0, q0), (1, q1)] {
        let k = core.runner_bead_count(eps);
        for i in 1..=k {
            beads.insert(2 * (q.part(i) + k - i) + eps);
        }
    }
    Ok(AbacusDisplay::from_beads(beads, 2).decode())
}

/// Components read runner by runner from the `r`-bead display on `p` runners.
pub fn runner_quotient(lambda: &Partition, p: usize, r: usize) -> Result<Vec<Partition>> {
    let d = AbacusDisplay::new(lambda, r, p)?;
    Ok((0..p).map(|j| d.runner_partition(j)).collect())
}

/// Ordered `p`-quotient: runners sorted by `p·(beads on runner) + index`.
/// Independent of the bead count; for `p = 2` it agrees with [`two_quotient`].
pub fn ordered_quotient(lambda: &Partition, p: usize) -> Result<Vec<Partition>> {
    let d = AbacusDisplay::new(lambda, lambda.len(), p)?;
    let mut runners: Vec<(usize, Partition)> = (0..p)
        .map(|j| (p * d.runner_bead_count(j) + j, d.runner_partition(j)))
        .collect();
    runners.sort_by_key(|(charge, _)| *charge);
    Ok(runners.into_iter().map(|(_, q)| q).collect())
}

/// `swp(λ, ε)`: add every addable and remove every removable `ε`-node.
pub fn swp(lambda: &Partition, eps: usize) -> Partition {
    swp_mod(lambda, eps, 2)
}

pub fn swp_mod(lambda: &Partition, eps: usize, p: usize) -> Partition {
    let mut parts = lambda.parts().to_vec();
    parts.push(0);
    for n in removable_nodes_mod(lambda, eps, p) {
        parts[n.row - 1] -= 1;
    }
    for n in addable_nodes_mod(lambda, eps, p) {
        parts[n.row - 1] += 1;
    }
    Partition::from_unsorted(parts)
}

/// `swp` computed by swapping the runners of a display with `r ≡ 1−ε`.
pub fn swp_by_runners(lambda: &Partition, eps: usize) -> Partition {
    let r = lambda.len() + (lambda.len() + 1 + eps) % 2;
    AbacusDisplay::new(lambda, r, 2)
        .expect("bead count covers all parts")
        .swap_runners(1)
        .decode()
}

/// Addable minus removable `ε`-nodes.
pub fn n_eps(lambda: &Partition, eps: usize) -> i64 {
    n_eps_mod(lambda, eps, 2)
}

pub fn n_eps_mod(lambda: &Partition, eps: usize, p: usize) -> i64 {
    addable_nodes_mod(lambda, eps, p).len() as i64 - removable_nodes_mod(lambda, eps, p).len() as i64
}

/// Swap runners `i−1` and `i` of the `r`-bead display on `p` runners.
/// The residue acted on is `(i − r) mod p`.
pub fn swp_general(lambda: &Partition, p: usize, i: usize, r: usize) -> Result<Partition> {
    if i == 0 || i >= p {
        return Err(Error::Domain(format!("runner index {i} outside 1..{p}")));
    }
    Ok(AbacusDisplay::new(lambda, r, p)?.swap_runners(i).decode())
}

/// `bswp(α, ε)` by the part-rewriting rule.
pub fn bswp(alpha: &StrictPartition, eps: usize) -> StrictPartition {
    let up = (2 * eps + 3) % 4;
    let down = (2 * eps + 1) % 4;
    let mut parts: Vec<usize> = alpha
        .parts()
        .iter()
        .filter(|&&d| !(eps == 0 && d == 1))
        .map(|&d| {
            if d % 4 == up {
                d + 2
            } else if d > 1 && d % 4 == down {
                d - 2
            } else {
                d
            }
        })
        .collect();
    if eps == 0 && !alpha.has_part(1) {
        parts.push(1);
    }
    StrictPartition::from_unsorted(parts).expect("bswp pairs parts bijectively")
}

/// Spin-addable minus spin-removable `ε`-nodes.
pub fn n_spin_eps(alpha: &StrictPartition, eps: usize) -> i64 {
    spin_addable_nodes(alpha, eps).len() as i64 - spin_removable_nodes(alpha, eps).len() as i64
}
