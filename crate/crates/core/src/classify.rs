//! 4-stepped-and-semicongruent strict partitions and their Specht partners.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::abacus::from_core_quotient;
use crate::error::{Error, Result};
use crate::partition::{bar_staircase, bar_staircase_index, double, staircase, strict_partitions, Partition, StrictPartition};
use crate::scalar::{sqrt2_pow, Scalar};

/// `α = γ̄_a ⊔ 2(δ_r + δ_s)` with `r ≥ s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FsasDecomposition {
    pub a: usize,
    pub r: usize,
    pub s: usize,
}

impl FsasDecomposition {
    pub fn compose(&self) -> StrictPartition {
        let beta = staircase(self.r).add(&staircase(self.s));
        let evens = StrictPartition::new(beta.parts().iter().map(|b| 2 * b).collect())
            .expect("δ_r + δ_s is strict");
        bar_staircase(self.a)
            .union(&evens)
            .expect("odd and even parts are disjoint")
    }
}

pub fn is_four_stepped(alpha: &StrictPartition) -> bool {
    alpha
        .parts()
        .iter()
        .all(|&p| p <= 4 || alpha.has_part(p - 4))
}

pub fn is_four_semicongruent(alpha: &StrictPartition) -> bool {
    let mut odd = alpha.parts().iter().filter(|p| *p % 2 == 1).map(|p| p % 4);
    match odd.next() {
        None => true,
        Some(first) => odd.all(|x| x == first),
    }
}

pub fn is_fsas(alpha: &StrictPartition) -> bool {
    is_four_stepped(alpha) && is_four_semicongruent(alpha)
}

/// Recovers `(a, r, s)`.
pub fn fsas_decompose(alpha: &StrictPartition) -> Result<FsasDecomposition> {
    let not = || Error::NotFsas(alpha.to_string());
    if !is_fsas(alpha) {
        return Err(not());
    }
    let a = bar_staircase_index(&alpha.odd_subpartition()).ok_or_else(not)?;
    let halves: Vec<usize> = alpha.even_subpartition().parts().iter().map(|p| p / 2).collect();
    let m = halves.iter().filter(|h| *h % 2 == 0).count();
    let k = halves.len() - m;
    let r = m + k;
    let s = if m >= k { m - k } else { k - m - 1 };
    let dec = FsasDecomposition { a, r, s };
    if dec.compose() != *alpha {
        return Err(Error::Consistency(format!("{alpha} does not recompose from {dec:?}")));
    }
    Ok(dec)
}

/// `λ(α)` and its conjugate. The first entry is `C(δ_a; δ_s, δ_r)` with
/// `r ≥ s`, so that `(12,8,7,4,3,2)` gives `(12,9,6,3,3,1,1,1)` first.
pub fn lambda_of(alpha: &StrictPartition) -> Result<(Partition, Partition)> {
    let FsasDecomposition { a, r, s } = fsas_decompose(alpha)?;
    let lam = from_core_quotient(&staircase(a), &staircase(s), &staircase(r))?;
    let conj = lam.conjugate();
    Ok((lam, conj))
}

/// A predicted proportionality `⟨⟨α⟩⟩ = ratio · [λ]` on odd classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedPair {
    pub alpha: StrictPartition,
    pub lambda: Partition,
    pub lambda_conj: Partition,
    pub ratio: Scalar,
}

impl PredictedPair {
    /// The distinct partners `{λ, λ′}`.
    pub fn partners(&self) -> Vec<Partition> {
        let mut v = vec![self.lambda.clone()];
        if self.lambda_conj != self.lambda {
            v.push(self.lambda_conj.clone());
        }
        v
    }
}

pub fn predicted_pairs(n: usize) -> Vec<PredictedPair> {
    strict_partitions(n)
        .into_iter()
        .filter(is_fsas)
        .map(|alpha| {
            let (lambda, lambda_conj) = lambda_of(&alpha).expect("FSAS input");
            let ratio = sqrt2_pow(alpha.even_parts() as i64);
            PredictedPair { alpha, lambda, lambda_conj, ratio }
        })
        .collect()
}

/// Pairs with equal Brauer characters, enumerated directly from the
/// staircase recipe rather than through [`predicted_pairs`].
pub fn equality_cases(n: usize) -> Vec<(StrictPartition, BTreeSet<Partition>)> {
    let unit = Partition::new(vec![1]).expect("(1) is a partition");
    let empty = Partition::empty();
    let mut out = Vec::new();
    for a in 0.. {
        let kappa = bar_staircase(a);
        if kappa.size() > n {
            break;
        }
        for eta_part in [0usize, 2, 4] {
            if kappa.size() + eta_part != n {
                continue;
            }
            let eta = StrictPartition::new(if eta_part == 0 { vec![] } else { vec![eta_part] })
                .expect("single part");
            let alpha = kappa.union(&eta).expect("odd and even parts are disjoint");
            let core = double(&kappa);
            let mut lambdas = BTreeSet::new();
            for sigma in [&empty, &unit] {
                for tau in [&empty, &unit] {
                    if 2 * (sigma.part(1) + tau.part(1)) == eta_part {
                        lambdas.insert(from_core_quotient(&core, sigma, tau).expect("2-core"));
                    }
                }
            }
            out.push((alpha, lambdas));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abacus::two_quotient;
    use crate::hooks::two_core;
    use crate::partition::{part, regularize2, strict};

    #[test]
    fn definitions() {
        assert!(is_fsas(&strict(&[12, 8, 7, 4, 3, 2])));
        assert!(!is_four_semicongruent(&strict(&[3, 1])));
        assert!(is_fsas(&strict(&[9, 5, 1])));
        assert!(!is_four_stepped(&strict(&[6])));
        assert!(is_fsas(&StrictPartition::empty()));
    }

    #[test]
    fn decompositions() {
        let d = fsas_decompose(&strict(&[12, 8, 7, 4, 3, 2])).unwrap();
        assert_eq!(d, FsasDecomposition { a: 4, r: 4, s: 2 });
        assert_eq!(fsas_decompose(&strict(&[4])).unwrap(), FsasDecomposition { a: 0, r: 1, s: 1 });
        for a in 0..8 {
            assert_eq!(
                fsas_decompose(&bar_staircase(a)).unwrap(),
                FsasDecomposition { a, r: 0, s: 0 }
            );
        }
        assert!(matches!(fsas_decompose(&strict(&[3, 1])), Err(Error::NotFsas(_))));
    }

    #[test]
    fn fsas_is_exactly_the_composed_form() {
        let mut composed = BTreeSet::new();
        for a in 0..=8 {
            for r in 0..=6 {
                for s in 0..=r {
                    let d = FsasDecomposition { a, r, s };
                    let alpha = d.compose();
                    if alpha.size() <= 20 {
                        assert_eq!(fsas_decompose(&alpha).unwrap(), d);
                        composed.insert(alpha);
                    }
                }
            }
        }
        for n in 0..=20 {
            for alpha in strict_partitions(n) {
                assert_eq!(is_fsas(&alpha), composed.contains(&alpha), "{alpha}");
            }
        }
    }

    #[test]
    fn lambdas() {
        assert_eq!(
            lambda_of(&strict(&[12, 8, 7, 4, 3, 2])).unwrap(),
            (
                part(&[12, 9, 6, 3, 3, 1, 1, 1]),
                part(&[8, 5, 5, 3, 3, 3, 2, 2, 2, 1, 1, 1])
            )
        );
        assert_eq!(lambda_of(&strict(&[4])).unwrap(), (part(&[2, 2]), part(&[2, 2])));
        assert_eq!(lambda_of(&strict(&[1])).unwrap(), (part(&[1]), part(&[1])));
    }

    #[test]
    fn lambda_invariants() {
        for n in 1..=20 {
            for alpha in strict_partitions(n).into_iter().filter(is_fsas) {
                let d = fsas_decompose(&alpha).unwrap();
                let (lam, conj) = lambda_of(&alpha).unwrap();
                assert_eq!(lam.size(), n);
                assert_eq!(two_core(&lam), staircase(d.a));
                assert_eq!(double(&bar_staircase(d.a)), staircase(d.a));
                let (_, q0, q1) = two_quotient(&lam);
                let got: BTreeSet<_> = [q0, q1].into_iter().collect();
                let want: BTreeSet<_> = [staircase(d.r), staircase(d.s)].into_iter().collect();
                assert_eq!(got, want);
                assert_eq!(regularize2(&lam), regularize2(&double(&alpha)), "{alpha}");
                assert_eq!(regularize2(&conj), regularize2(&double(&alpha)), "{alpha}");
            }
        }
    }

    #[test]
    fn conjugation_swaps_staircase_quotients() {
        for a in 0..=5 {
            for r in 0..=5 {
                for s in 0..=5 {
                    let l = from_core_quotient(&staircase(a), &staircase(r), &staircase(s)).unwrap();
                    let m = from_core_quotient(&staircase(a), &staircase(s), &staircase(r)).unwrap();
                    assert_eq!(l.conjugate(), m, "a={a} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn small_predictions() {
        let p4 = predicted_pairs(4);
        assert_eq!(p4.len(), 1);
        assert_eq!(p4[0].alpha, strict(&[4]));
        assert_eq!(p4[0].partners(), vec![part(&[2, 2])]);
        assert_eq!(p4[0].ratio, Scalar::sqrt2());
        let p1 = predicted_pairs(1);
        assert_eq!(p1[0].partners(), vec![part(&[1])]);
        assert_eq!(p1[0].ratio, Scalar::one());
        let p3 = predicted_pairs(3);
        assert_eq!(p3.len(), 2);
        assert_eq!((p3[0].alpha.clone(), p3[0].partners()), (strict(&[3]), vec![part(&[2, 1])]));
        assert_eq!(p3[1].alpha, strict(&[2, 1]));
        assert_eq!(p3[1].partners(), vec![part(&[3]), part(&[1, 1, 1])]);
        assert_eq!(p3[1].ratio, Scalar::sqrt2());
    }

    #[test]
    fn equality_examples() {
        let e4 = equality_cases(4);
        assert_eq!(e4, vec![(strict(&[4]), [part(&[2, 2])].into_iter().collect())]);
        let e2 = equality_cases(2);
        assert_eq!(e2, vec![(strict(&[2]), [part(&[2]), part(&[1, 1])].into_iter().collect())]);
        let e8 = equality_cases(8);
        let (alpha, lams) = e8.iter().find(|(a, _)| *a == strict(&[5, 2, 1])).unwrap();
        assert_eq!(*alpha, strict(&[5, 2, 1]));
        for l in lams {
            assert_eq!(two_core(l), staircase(3));
        }
        assert_eq!(lams.len(), 2);
    }

    #[test]
    fn equality_cases_are_predicted_with_small_e() {
        for n in 1..=20 {
            let pred = predicted_pairs(n);
            for (alpha, lams) in equality_cases(n) {
                let p = pred.iter().find(|p| p.alpha == alpha).expect("predicted");
                assert!(alpha.even_parts() <= 1);
                let partners: BTreeSet<_> = p.partners().into_iter().collect();
                assert_eq!(partners, lams);
            }
            let small: usize = pred.iter().filter(|p| p.alpha.even_parts() <= 1).count();
            assert_eq!(small, equality_cases(n).len());
        }
    }
}
