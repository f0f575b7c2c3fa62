//! Character values on classes of odd-order elements: Specht characters by
//! Murnaghan–Nakayama, spin characters `⟨⟨α⟩⟩` from the Schur `P` expansion,
//! degrees, and the proportionality scan.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hooks::rim_hooks;
use crate::par;
use crate::partition::{odd_part_partitions, partitions, strict_partitions, Partition, StrictPartition};
use crate::scalar::{sqrt2_pow, Scalar};
use crate::symfunc::p_basis;

type MnMemo = RwLock<HashMap<(Partition, Partition), i64>>;

static MN_MEMO: OnceLock<MnMemo> = OnceLock::new();

/// `χ^λ(ν)` by Murnaghan–Nakayama, stripping the parts of `ν` largest first.
pub fn specht_value(lambda: &Partition, nu: &Partition) -> Result<i64> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(lambda.size(), nu.size()));
    }
    Ok(mn(lambda, nu.parts()))
}

fn mn(lambda: &Partition, nu: &[usize]) -> i64 {
    if nu.is_empty() {
        return 1;
    }
    let memo = MN_MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (lambda.clone(), Partition::from_unsorted(nu.to_vec()));
    if let Some(v) = memo.read().expect("MN memo poisoned").get(&key) {
        return *v;
    }
    let v = rim_hooks(lambda, nu[0])
        .iter()
        .map(|h| {
            let sign = if h.leg % 2 == 0 { 1 } else { -1 };
            sign * mn(&h.result, &nu[1..])
        })
        .sum();
    memo.write().expect("MN memo poisoned").insert(key, v);
    v
}

/// Hook-length formula.
pub fn specht_degree(lambda: &Partition) -> BigInt {
    let nf: BigInt = (1..=lambda.size()).map(BigInt::from).product();
    let hooks: BigInt = lambda.hook_lengths().into_iter().map(BigInt::from).product();
    nf / hooks
}

/// Degree of `⟨⟨α⟩⟩`: `2^{(n−ℓ)/2} · n!/∏α_i! · ∏_{i<j} (α_i−α_j)/(α_i+α_j)`.
pub fn spin_degree(alpha: &StrictPartition) -> Scalar {
    let n = alpha.size();
    let parts = alpha.parts();
    let fact = |k: usize| -> BigInt { (1..=k).map(BigInt::from).product() };
    let mut r = BigRational::from_integer(fact(n));
    for &a in parts {
        r /= BigRational::from_integer(fact(a));
    }
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            r *= BigRational::new(BigInt::from(a - b), BigInt::from(a + b));
        }
    }
    sqrt2_pow((n - parts.len()) as i64).scale(&r)
}

fn require_odd_class(nu: &Partition) -> Result<()> {
    if nu.parts().iter().any(|p| p % 2 == 0) {
        return Err(Error::Domain(format!("class {nu} has an even part")));
    }
    Ok(())
}

/// `∏_i (−1)^{(ν_i²−1)/8}` over the (odd) parts of `ν`.
pub fn odd_lift_sign(nu: &Partition) -> i32 {
    let flips = nu.parts().iter().filter(|&&k| k % 8 == 3 || k % 8 == 5).count();
    if flips % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `⟨⟨α⟩⟩` at the odd-order element of cycle type `ν`.
///
/// With `X_ν` the coefficient of `P_α` in `p_ν`, the value is
/// `deg⟨⟨α⟩⟩ · ε_ν · 2^{(ℓ(ν)−n)/2} · X_ν / X_{(1^n)}`, where
/// `ε_ν = ∏_i (−1)^{(ν_i²−1)/8}` moves from the standard lift
/// `t_1⋯t_{k−1}` of each `k`-cycle to its odd-order lift.
pub fn spin_value(alpha: &StrictPartition, nu: &Partition) -> Result<Scalar> {
    let n = alpha.size();
    if nu.size() != n {
        return Err(Error::SizeMismatch(n, nu.size()));
    }
    require_odd_class(nu)?;
    let basis = p_basis(n)?;
    let a = basis.strict_index(alpha).expect("strict partition of n");
    let x = &basis.coords[a];
    let ones = Partition::from_unsorted(vec![1; n]);
    let x1 = &x[basis.class_index(&ones).expect("(1^n) is an odd class")];
    if x1.is_zero() {
        return Err(Error::Consistency(format!("P-coefficient of {alpha} in p_(1^n) vanishes")));
    }
    let xnu = &x[basis.class_index(nu).expect("odd class of n")];
    let half = (n - nu.len()) / 2;
    let mut factor = BigRational::new(BigInt::one(), BigInt::one() << half) * xnu / x1;
    if odd_lift_sign(nu) < 0 {
        factor = -factor;
    }
    Ok(spin_degree(alpha).scale(&factor))
}

/// Label of a Brauer vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "basis", content = "label", rename_all = "lowercase")]
pub enum CharLabel {
    Specht(Partition),
    Spin(StrictPartition),
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::Specht(l) => write!(f, "[{l}]"),
            CharLabel::Spin(a) => write!(f, "⟨⟨{a}⟩⟩"),
        }
    }
}

/// Values on the odd classes of `S_n`, classes in lexicographically
/// descending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerVector {
    pub n: usize,
    pub label: CharLabel,
    pub values: Vec<(Partition, Scalar)>,
}

impl BrauerVector {
    pub fn get(&self, nu: &Partition) -> Option<&Scalar> {
        self.values.iter().find(|(k, _)| k == nu).map(|(_, v)| v)
    }

    pub fn degree(&self) -> &Scalar {
        &self.values.last().expect("(1^n) is always a class").1
    }

    pub fn scaled(&self, c: &Scalar) -> BrauerVector {
        BrauerVector {
            n: self.n,
            label: self.label.clone(),
            values: self.values.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }
}

pub fn linear_brauer(lambda: &Partition) -> BrauerVector {
    let n = lambda.size();
    let values = odd_part_partitions(n)
        .into_iter()
        .map(|nu| {
            let v = mn(lambda, nu.parts());
            (nu, Scalar::from_int(v))
        })
        .collect();
    BrauerVector { n, label: CharLabel::Specht(lambda.clone()), values }
}

pub fn spin_brauer(alpha: &StrictPartition) -> Result<BrauerVector> {
    let n = alpha.size();
    let values = odd_part_partitions(n)
        .into_iter()
        .map(|nu| spin_value(alpha, &nu).map(|v| (nu, v)))
        .collect::<Result<_>>()?;
    Ok(BrauerVector { n, label: CharLabel::Spin(alpha.clone()), values })
}

/// `c` with `u = c·v`, if one exists.
pub fn proportional(u: &BrauerVector, v: &BrauerVector) -> Option<Scalar> {
    if u.n != v.n || u.values.len() != v.values.len() {
        return None;
    }
    let c = u.degree().checked_div(v.degree()).ok()?;
    u.values
        .iter()
        .zip(&v.values)
        .all(|((k1, a), (k2, b))| k1 == k2 && *a == &c * b)
        .then_some(c)
}

/// Every Brauer vector of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTables {
    pub n: usize,
    pub linear: Vec<BrauerVector>,
    pub spin: Vec<BrauerVector>,
}

impl CharTables {
    pub fn compute(n: usize) -> Result<Self> {
        let lambdas = partitions(n);
        let alphas = strict_partitions(n);
        let linear = par::map(&lambdas, linear_brauer);
        let spin = par::map(&alphas, spin_brauer).into_iter().collect::<Result<_>>()?;
        Ok(CharTables { n, linear, spin })
    }

    pub fn compute_sequential(n: usize) -> Result<Self> {
        let linear = par::map_sequential(&partitions(n), linear_brauer);
        let spin = par::map_sequential(&strict_partitions(n), spin_brauer)
            .into_iter()
            .collect::<Result<_>>()?;
        Ok(CharTables { n, linear, spin })
    }
}

/// A proportional pair `⟨⟨α⟩⟩ = ratio · [λ]` found by the scan.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScanPair {
    pub alpha: StrictPartition,
    pub lambda: Partition,
    pub ratio: Scalar,
}

fn pairs_for(spin: &BrauerVector, linear: &[BrauerVector]) -> Vec<ScanPair> {
    let CharLabel::Spin(alpha) = &spin.label else {
        unreachable!("spin table holds spin labels")
    };
    linear
        .iter()
        .filter_map(|l| {
            let CharLabel::Specht(lambda) = &l.label else {
                unreachable!("linear table holds Specht labels")
            };
            proportional(spin, l).map(|ratio| ScanPair {
                alpha: alpha.clone(),
                lambda: lambda.clone(),
                ratio,
            })
        })
        .collect()
}

/// Every proportional pair in precomputed tables.
pub fn scan_tables(t: &CharTables) -> Vec<ScanPair> {
    let mut out: Vec<ScanPair> = par::map(&t.spin, |s| pairs_for(s, &t.linear)).into_iter().flatten().collect();
    out.sort();
    out
}

pub fn scan(n: usize) -> Result<Vec<ScanPair>> {
    Ok(scan_tables(&CharTables::compute(n)?))
}

pub fn scan_sequential(n: usize) -> Result<Vec<ScanPair>> {
    let t = CharTables::compute_sequential(n)?;
    let mut out: Vec<ScanPair> = t.spin.iter().flat_map(|s| pairs_for(s, &t.linear)).collect();
    out.sort();
    Ok(out)
}

/// Coefficient-wise view of a vector, for quick lookups in tests and reports.
pub fn as_map(v: &BrauerVector) -> BTreeMap<Partition, Scalar> {
    v.values.iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hooks::{k_weight, odd_bar_core};
    use crate::partition::{part, strict};
    use crate::symfunc::{schur_s, z};

    #[test]
    fn murnaghan_nakayama() {
        for n in 1..=8 {
            for nu in partitions(n) {
                assert_eq!(specht_value(&part(&[n]), &nu).unwrap(), 1);
                let sign = if (n - nu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(specht_value(&part(&vec![1; n]), &nu).unwrap(), sign);
            }
        }
        assert_eq!(specht_value(&part(&[2, 2]), &part(&[3, 1])).unwrap(), -1);
        assert_eq!(
            specht_value(&part(&[2, 2]), &part(&[3])),
            Err(Error::SizeMismatch(4, 3))
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(specht_degree(&part(&[5])), BigInt::one());
        assert_eq!(specht_degree(&part(&[3, 1])), BigInt::from(3));
        assert_eq!(specht_degree(&part(&[2, 2])), BigInt::from(2));
        assert_eq!(spin_degree(&strict(&[3, 1])), Scalar::from_int(4));
        assert_eq!(spin_degree(&strict(&[4])), &Scalar::from_int(2) * &Scalar::sqrt2());
    }

    #[test]
    fn sums_of_squares() {
        for n in 1..=12 {
            let nf: BigInt = (1..=n).map(BigInt::from).product();
            let lin: BigInt = partitions(n).iter().map(|l| specht_degree(l).pow(2)).sum();
            assert_eq!(lin, nf);
            let mut spin = Scalar::zero();
            for a in strict_partitions(n) {
                let d = spin_degree(&a);
                spin += &(&d * &d);
            }
            assert_eq!(spin, Scalar::from_rational(BigRational::from_integer(nf)));
        }
    }

    #[test]
    fn mn_matches_schur_transition() {
        for n in 1..=8 {
            for l in partitions(n) {
                let s = schur_s(&l);
                for nu in partitions(n) {
                    let expect = s.coeff(&nu) * BigRational::from_integer(z(&nu));
                    assert_eq!(
                        BigRational::from_integer(specht_value(&l, &nu).unwrap().into()),
                        expect
                    );
                }
            }
        }
    }

    #[test]
    fn s4_tilde_golden_values() {
        let s4 = spin_brauer(&strict(&[4])).unwrap();
        let l22 = linear_brauer(&part(&[2, 2]));
        let two_root2 = &Scalar::from_int(2) * &Scalar::sqrt2();
        assert_eq!(s4.get(&part(&[1, 1, 1, 1])), Some(&two_root2));
        assert_eq!(s4.get(&part(&[3, 1])), Some(&-Scalar::sqrt2()));
        assert_eq!(l22.get(&part(&[1, 1, 1, 1])), Some(&Scalar::from_int(2)));
        assert_eq!(l22.get(&part(&[3, 1])), Some(&Scalar::from_int(-1)));
        assert_eq!(proportional(&s4, &l22), Some(Scalar::sqrt2()));
        assert_eq!(proportional(&s4, &s4), Some(Scalar::one()));
        let s31 = spin_brauer(&strict(&[3, 1])).unwrap();
        for l in partitions(4) {
            assert_eq!(proportional(&s31, &linear_brauer(&l)), None);
        }
        let one = spin_brauer(&strict(&[1])).unwrap();
        assert_eq!(one.values, vec![(part(&[1]), Scalar::one())]);
        assert!(spin_value(&strict(&[4]), &part(&[2, 2])).is_err());
    }

    #[test]
    fn small_scans() {
        let s4 = scan(4).unwrap();
        assert_eq!(
            s4,
            vec![ScanPair { alpha: strict(&[4]), lambda: part(&[2, 2]), ratio: Scalar::sqrt2() }]
        );
        assert_eq!(
            scan(1).unwrap(),
            vec![ScanPair { alpha: strict(&[1]), lambda: part(&[1]), ratio: Scalar::one() }]
        );
        assert_eq!(scan(7).unwrap(), scan_sequential(7).unwrap());
    }

    #[test]
    fn linear_brauer_is_conjugation_invariant() {
        for n in 1..=9 {
            for l in partitions(n) {
                assert_eq!(linear_brauer(&l).values, linear_brauer(&l.conjugate()).values);
            }
        }
    }

    #[test]
    fn spin_values_are_integral() {
        for n in 1..=9 {
            for a in strict_partitions(n) {
                for (_, v) in spin_brauer(&a).unwrap().values {
                    assert!(v.is_integer_or_integer_sqrt2(), "{a}: {v}");
                }
            }
        }
    }

    fn count(nu: &Partition, k: usize) -> usize {
        nu.parts().iter().filter(|&&p| p == k).count()
    }

    #[test]
    fn support_matches_weights() {
        for n in 1..=8 {
            for k in (1..=n).step_by(2) {
                for a in strict_partitions(n) {
                    let w = odd_bar_core(&a, k).unwrap().1;
                    let v = spin_brauer(&a).unwrap();
                    for (nu, val) in &v.values {
                        if count(nu, k) > w {
                            assert!(val.is_zero());
                        }
                    }
                    let mut at = vec![k; w];
                    at.extend(vec![1; n - k * w]);
                    assert!(!v.get(&Partition::from_unsorted(at)).unwrap().is_zero());
                }
                for l in partitions(n) {
                    let w = k_weight(&l, k);
                    let v = linear_brauer(&l);
                    for (nu, val) in &v.values {
                        if count(nu, k) > w {
                            assert!(val.is_zero());
                        }
                    }
                    let mut at = vec![k; w];
                    at.extend(vec![1; n - k * w]);
                    assert!(!v.get(&Partition::from_unsorted(at)).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn brauer_json_round_trip() {
        let v = spin_brauer(&strict(&[4])).unwrap();
        let j = serde_json::to_string(&v).unwrap();
        let back: BrauerVector = serde_json::from_str(&j).unwrap();
        assert_eq!(back, v);
        assert_eq!(serde_json::to_string(&back).unwrap(), j);
    }
}
