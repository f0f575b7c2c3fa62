//! Verification suites with machine-readable reports.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::abacus::{bswp, from_core_quotient, n_eps, n_spin_eps, swp, swp_by_runners};
use crate::charspace::{
    apply_e, b_bruteforce, fmt_label, b_by_columns, b_closed, brauer_of, harpoon, interm0, interm_sum,
    k_count, kom, quot_red, remove_first_column, runner_swap, b_summand, Basis, Bipartition,
    CharVector,
};
use crate::charvalues::{
    linear_brauer, proportional, scan_tables, spin_brauer, spin_degree, specht_degree, specht_value,
    CharLabel, ScanPair,
};
use crate::cache::{tables, TableCache};
use crate::classify::{equality_cases, predicted_pairs};
use crate::error::{Error, Result};
use crate::hooks::{four_bar_core, k_weight, largest_odd_bar, odd_bar_core, rim_hooks, two_core};
use crate::nodes::{restrict_all, spin_restrict_all};
use crate::par;
use crate::partition::{
    bar_staircase, content, double, part, partitions, regularize2, spin_content, staircase,
    strict, strict_partitions, Partition, StrictPartition,
};
use crate::scalar::{sqrt2_pow, Scalar};
use crate::symfunc::{schur_p, schur_s, z};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Case {
    pub fn new(input: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Case { input: input.into(), expected, actual, pass }
    }

    fn failed(input: impl Into<String>, e: &Error) -> Self {
        Case { input: input.into(), expected: "no error".into(), actual: e.to_string(), pass: false }
    }

    fn of(input: impl Into<String>, r: Result<(String, String)>) -> Self {
        let input = input.into();
        match r {
            Ok((e, a)) => Case::new(input, e, a),
            Err(err) => Case::failed(input, &err),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    #[serde(rename = "maxN")]
    pub max_n: usize,
    pub cases: Vec<Case>,
    pub pass: bool,
    pub millis: u64,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Main,
    Equality,
    RunnerSwap,
    RunnerSwapSpin,
    QuotRed,
    Interm,
    Symfunc,
    Degrees,
    Invariants,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Main,
        Suite::Equality,
        Suite::RunnerSwap,
        Suite::RunnerSwapSpin,
        Suite::QuotRed,
        Suite::Interm,
        Suite::Symfunc,
        Suite::Degrees,
        Suite::Invariants,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Equality => "equality",
            Suite::RunnerSwap => "runner-swap",
            Suite::RunnerSwapSpin => "runner-swap-spin",
            Suite::QuotRed => "quot-red",
            Suite::Interm => "interm",
            Suite::Symfunc => "symfunc",
            Suite::Degrees => "degrees",
            Suite::Invariants => "invariants",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

pub fn run(suite: Suite, max_n: usize) -> Result<VerificationReport> {
    run_with_cache(suite, max_n, None)
}

/// As [`run`], reading and filling a table cache for the scan-based suites.
pub fn run_with_cache(suite: Suite, max_n: usize, cache: Option<&TableCache>) -> Result<VerificationReport> {
    if max_n == 0 {
        return Err(Error::Domain("max_n must be at least 1".into()));
    }
    let start = Instant::now();
    let cases = cases_for(suite, max_n, cache);
    let pass = cases.iter().all(|c| c.pass);
    Ok(VerificationReport {
        suite: suite.name().into(),
        max_n,
        cases,
        pass,
        millis: start.elapsed().as_millis() as u64,
    })
}

fn cases_for(suite: Suite, max_n: usize, cache: Option<&TableCache>) -> Vec<Case> {
    match suite {
        Suite::Main => main_cases(max_n, cache),
        Suite::Equality => equality_cases_suite(max_n, cache),
        Suite::RunnerSwap => runner_swap_cases(max_n),
        Suite::RunnerSwapSpin => runner_swap_spin_cases(max_n),
        Suite::QuotRed => quot_red_cases(max_n),
        Suite::Interm => interm_cases(max_n),
        Suite::Symfunc => symfunc_cases(max_n),
        Suite::Degrees => degree_cases(max_n),
        Suite::Invariants => invariant_cases(max_n),
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|s| {
                cases_for(*s, max_n, cache).into_iter().map(move |mut c| {
                    c.input = format!("{}: {}", s.name(), c.input);
                    c
                })
            })
            .collect(),
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

fn show_pair(p: &ScanPair) -> String {
    format!("⟨⟨{}⟩⟩ = {}·[{}]", p.alpha, p.ratio, p.lambda)
}

/// Predicted pairs expanded over both partners, in scan order.
pub fn expected_scan(n: usize) -> Vec<ScanPair> {
    let mut out: Vec<ScanPair> = predicted_pairs(n)
        .into_iter()
        .flat_map(|p| {
            let ratio = p.ratio.clone();
            let alpha = p.alpha.clone();
            p.partners()
                .into_iter()
                .map(move |lambda| ScanPair { alpha: alpha.clone(), lambda, ratio: ratio.clone() })
        })
        .collect();
    out.sort();
    out
}

fn main_cases(max_n: usize, cache: Option<&TableCache>) -> Vec<Case> {
    let ns: Vec<usize> = (1..=max_n).collect();
    par::map(&ns, |&n| {
        Case::of(
            format!("n={n}"),
            tables(cache, n).map(|t| scan_tables(&t)).map(|got| {
                let ok_ratio = got.iter().all(|p| p.ratio == sqrt2_pow(p.alpha.even_parts() as i64));
                let want = join(expected_scan(n).iter().map(show_pair));
                let mut actual = join(got.iter().map(show_pair));
                if !ok_ratio {
                    actual.push_str(" (ratio is not √2^e)");
                }
                (want, actual)
            }),
        )
    })
}

fn show_groups(groups: &[(StrictPartition, BTreeSet<Partition>)]) -> String {
    join(groups.iter().map(|(a, ls)| format!("{a} ↦ {{{}}}", join(ls.iter()))))
}

fn equality_cases_suite(max_n: usize, cache: Option<&TableCache>) -> Vec<Case> {
    let ns: Vec<usize> = (1..=max_n).collect();
    par::map(&ns, |&n| {
        Case::of(
            format!("n={n}"),
            tables(cache, n).map(|t| scan_tables(&t)).map(|got| {
                let mut groups: Vec<(StrictPartition, BTreeSet<Partition>)> = Vec::new();
                for p in got.iter().filter(|p| p.alpha.even_parts() <= 1) {
                    match groups.iter_mut().find(|(a, _)| *a == p.alpha) {
                        Some((_, ls)) => {
                            ls.insert(p.lambda.clone());
                        }
                        None => groups.push((p.alpha.clone(), [p.lambda.clone()].into_iter().collect())),
                    }
                }
                groups.sort();
                (show_groups(&equality_cases(n)), show_groups(&groups))
            }),
        )
    })
}

/// `±label` when `v` is a single term with coefficient `±1`; otherwise the
/// whole vector, so that a mismatch is visible in the report.
fn up_to_sign(v: &CharVector, unit: &Scalar) -> String {
    let mut it = v.terms();
    match (it.next(), it.next()) {
        (Some((l, c)), None) if *c == *unit || *c == -unit => format!("±{}", label_text(l)),
        _ => v.to_string(),
    }
}

fn label_text(l: &CharLabel) -> String {
    fmt_label(l)
}

fn pm(l: CharLabel) -> String {
    format!("±{}", label_text(&l))
}

fn sign_of(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn all_partitions(max_n: usize) -> Vec<Partition> {
    (0..=max_n).flat_map(partitions).collect()
}

fn all_strict(max_n: usize) -> Vec<StrictPartition> {
    (0..=max_n).flat_map(strict_partitions).collect()
}

/// Sweep of `S_ε^{(n_ε(λ))}[λ] = (−1)^{|swp λ| − |λ ∩ swp λ|}[swp λ]`.
pub fn linear_swap_sweep(max_n: usize) -> Vec<Case> {
    let inputs: Vec<(Partition, usize)> =
        all_partitions(max_n).into_iter().flat_map(|l| [(l.clone(), 0), (l, 1)]).collect();
    par::map(&inputs, |(l, eps)| {
        Case::of(
            format!("S_{eps}^({}) [{l}]", n_eps(l, *eps)),
            runner_swap(*eps, n_eps(l, *eps), &CharVector::specht(l)).map(|got| {
                let target = swp(l, *eps);
                let sign = sign_of(target.size() - l.intersect(&target).size());
                let mut want = CharVector::specht(&target).scaled(&Scalar::from_int(sign)).to_string();
                if swp_by_runners(l, *eps) != target {
                    want.push_str(" (abacus swap disagrees)");
                }
                (want, got.to_string())
            }),
        )
    })
}

/// Core/quotient transport of the linear runner swap, `a ≤ 4`, `|q| ≤ 4`.
pub fn linear_swap_transport() -> Vec<Case> {
    let mut inputs = Vec::new();
    for a in 0..=4 {
        for w in 0..=4 {
            for q in Bipartition::all(w) {
                inputs.push((a, q));
            }
        }
    }
    par::map(&inputs, |(a, q)| {
        let a = *a;
        Case::of(
            format!("a={a} quotient={q}"),
            (|| {
                let l = from_core_quotient(&staircase(a), &q.comp0, &q.comp1)?;
                let v = CharVector::specht(&l);
                let up = runner_swap(a % 2, a as i64 + 1, &v)?;
                let up_want = from_core_quotient(&staircase(a + 1), &q.comp0, &q.comp1)?;
                let mut want = pm(CharLabel::Specht(up_want));
                let mut got = up_to_sign(&up, &Scalar::one());
                if a >= 1 {
                    let down = runner_swap((a + 1) % 2, -(a as i64), &v)?;
                    let down_want = from_core_quotient(&staircase(a - 1), &q.comp0, &q.comp1)?;
                    want = format!("{want} | {}", pm(CharLabel::Specht(down_want)));
                    got = format!("{got} | {}", up_to_sign(&down, &Scalar::one()));
                }
                Ok((want, got))
            })(),
        )
    })
}

fn rs_triples(bound: usize, spin: bool) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=bound {
        for r in 0..=bound {
            for s in 0..=bound {
                let size = if spin {
                    bar_staircase(a).size() + 2 * (staircase(r).size() + staircase(s).size())
                } else {
                    staircase(a).size() + 2 * (staircase(r).size() + staircase(s).size())
                };
                if size <= bound {
                    out.push((a, r, s));
                }
            }
        }
    }
    out
}

/// `S_ε^{(−a)}[C(δ_a; δ_r, δ_s)] = ±[C(δ_{a−1}; δ_r, δ_s)]`.
pub fn linear_swap_application(bound: usize) -> Vec<Case> {
    let triples = rs_triples(bound, false);
    par::map(&triples, |&(a, r, s)| {
        Case::of(
            format!("a={a} r={r} s={s}"),
            (|| {
                let l = from_core_quotient(&staircase(a), &staircase(r), &staircase(s))?;
                let got = runner_swap((a + 1) % 2, -(a as i64), &CharVector::specht(&l))?;
                let want = from_core_quotient(&staircase(a - 1), &staircase(r), &staircase(s))?;
                Ok((pm(CharLabel::Specht(want)), up_to_sign(&got, &Scalar::one())))
            })(),
        )
    })
}

fn runner_swap_cases(max_n: usize) -> Vec<Case> {
    let mut cases = linear_swap_sweep(max_n);
    cases.extend(linear_swap_transport());
    cases.extend(linear_swap_application(16.max(max_n)));
    cases.push(Case::of(
        "S_1^(-2) [6,3,1,1]",
        runner_swap(1, -2, &CharVector::specht(&part(&[6, 3, 1, 1])))
            .map(|v| ("−[5,2,2]".to_string(), v.to_string())),
    ));
    cases.push(Case::of("p=5 S_2^(1) [9,8,5,1^5]", odd_p_example()));
    cases
}

/// The `p = 5` example: the displayed expansion `f^{(1)} − f^{(2)}e^{(1)}`
/// and the defining sum, which differ by an overall sign.
pub fn odd_p_example() -> Result<(String, String)> {
    use crate::charspace::apply_f;
    let v = CharVector::specht_mod(&part(&[9, 8, 5, 1, 1, 1, 1, 1]), 5);
    let displayed = apply_f(2, 1, &v).try_sub(&apply_f(2, 2, &apply_e(2, 1, &v)))?;
    let defined = runner_swap(2, 1, &v)?;
    Ok((
        "−[9,9,4,1,1,1,1,1,1] | [9,9,4,1,1,1,1,1,1]".to_string(),
        format!("{displayed} | {defined}"),
    ))
}

/// Sweep of `S_ε^{(ñ_ε(α))}⟨⟨α⟩⟩ = ±⟨⟨bswp(α, ε)⟩⟩`.
pub fn spin_swap_sweep(max_n: usize) -> Vec<Case> {
    let inputs: Vec<(StrictPartition, usize)> =
        all_strict(max_n).into_iter().flat_map(|a| [(a.clone(), 0), (a, 1)]).collect();
    par::map(&inputs, |(a, eps)| {
        let c = n_spin_eps(a, *eps);
        Case::of(
            format!("S_{eps}^({c}) ⟨⟨{a}⟩⟩"),
            runner_swap(*eps, c, &CharVector::spin(a))
                .map(|got| (pm(CharLabel::Spin(bswp(a, *eps))), up_to_sign(&got, &Scalar::one()))),
        )
    })
}

fn spin_transport_inputs(bound: usize) -> Vec<(usize, StrictPartition)> {
    let mut out = Vec::new();
    for a in 0..=bound {
        let g = bar_staircase(a);
        if g.size() > bound {
            break;
        }
        for k in 0..=(bound - g.size()) / 2 {
            for eta in strict_partitions(k) {
                out.push((a, eta));
            }
        }
    }
    out
}

fn glue(a: usize, eta: &StrictPartition) -> StrictPartition {
    bar_staircase(a).union(&eta.doubled_parts()).expect("odd and even parts are disjoint")
}

/// Runner swaps on `γ̄_a ⊔ 2η` with `|γ̄_a ⊔ 2η| ≤ bound`.
pub fn spin_swap_transport(bound: usize) -> Vec<Case> {
    let inputs = spin_transport_inputs(bound);
    par::map(&inputs, |(a, eta)| {
        let a = *a;
        let alpha = glue(a, eta);
        Case::of(
            format!("a={a} η={eta}"),
            (|| {
                let v = CharVector::spin(&alpha);
                let up = runner_swap(a % 2, a as i64 + 1, &v)?;
                let mut want = pm(CharLabel::Spin(glue(a + 1, eta)));
                let mut got = up_to_sign(&up, &Scalar::one());
                if a >= 1 {
                    let down = runner_swap((a + 1) % 2, -(a as i64), &v)?;
                    want = format!("{want} | {}", pm(CharLabel::Spin(glue(a - 1, eta))));
                    got = format!("{got} | {}", up_to_sign(&down, &Scalar::one()));
                }
                Ok((want, got))
            })(),
        )
    })
}

fn staircase_sum(r: usize, s: usize) -> StrictPartition {
    StrictPartition::try_from(staircase(r).add(&staircase(s))).expect("δ_r + δ_s is strict")
}

/// `S_ε^{(−a)}⟨⟨γ̄_a ⊔ 2(δ_r+δ_s)⟩⟩ = ±⟨⟨γ̄_{a−1} ⊔ 2(δ_r+δ_s)⟩⟩`.
pub fn spin_swap_application(bound: usize) -> Vec<Case> {
    let triples: Vec<_> = rs_triples(bound, true).into_iter().filter(|(_, r, s)| r >= s).collect();
    par::map(&triples, |&(a, r, s)| {
        let eta = staircase_sum(r, s);
        Case::of(
            format!("a={a} r={r} s={s}"),
            runner_swap((a + 1) % 2, -(a as i64), &CharVector::spin(&glue(a, &eta)))
                .map(|got| (pm(CharLabel::Spin(glue(a - 1, &eta))), up_to_sign(&got, &Scalar::one()))),
        )
    })
}

fn runner_swap_spin_cases(max_n: usize) -> Vec<Case> {
    let mut cases = spin_swap_sweep(max_n);
    cases.extend(spin_swap_transport(16.max(max_n)));
    cases.extend(spin_swap_application(16.max(max_n)));
    cases.push(Case::of(
        "S_1^(-2) ⟨⟨6,3,2⟩⟩",
        runner_swap(1, -2, &CharVector::spin(&strict(&[6, 3, 2])))
            .map(|v| ("−⟨⟨6,2,1⟩⟩".to_string(), v.to_string())),
    ));
    cases
}

/// RoCK partitions `C(δ_c; bλ)` of size at most `bound`.
pub fn rock_partitions(bound: usize) -> Vec<(usize, Bipartition, Partition)> {
    let mut out = Vec::new();
    for c in 0.. {
        let core = staircase(c);
        if core.size() > bound {
            break;
        }
        for w in 0..=(c + 1).min((bound - core.size()) / 2) {
            for q in Bipartition::all(w) {
                let l = from_core_quotient(&core, &q.comp0, &q.comp1).expect("staircase core");
                out.push((c, q, l));
            }
        }
    }
    out
}

/// `R_ε^{(d)}[λ]` from the interm sums, for RoCK `λ` with `max{w, w+d} ≤ c+1`.
pub fn linear_rock_prediction(c: usize, q: &Bipartition, d: i64) -> Result<CharVector> {
    let core = staircase(c);
    let w = q.size() as i64;
    let target = w + d;
    let n = (core.size() as i64 + 2 * target).max(0) as usize;
    let mut v = CharVector::zero(Basis::linear(), n);
    if target < 0 {
        return Ok(v);
    }
    for m in Bipartition::all(target as usize) {
        let s = interm_sum(q, &m);
        if s != 0 {
            let mu = from_core_quotient(&core, &m.comp0, &m.comp1)?;
            v.add_term(CharLabel::Specht(mu), &Scalar::from_int(s))?;
        }
    }
    Ok(v)
}

/// Every `(λ, d)` with `|λ| ≤ bound`, `|d| ≤ 3` inside the RoCK bound.
pub fn linear_rock_cases(bound: usize) -> Vec<Case> {
    let mut inputs = Vec::new();
    for (c, q, l) in rock_partitions(bound) {
        for d in -3i64..=3 {
            let w = q.size() as i64;
            if w.max(w + d) <= c as i64 + 1 && w + d >= 0 {
                inputs.push((c, q.clone(), l.clone(), d));
            }
        }
    }
    par::map(&inputs, |(c, q, l, d)| {
        Case::of(
            format!("R_{}^({d}) [{l}]", (c + 1) % 2),
            (|| {
                let got = quot_red((c + 1) % 2, *d, &CharVector::specht(l))?;
                Ok((linear_rock_prediction(*c, q, *d)?.to_string(), got.to_string()))
            })(),
        )
    })
}

/// Domino removal `e_ε̄^{(r)} e_ε^{(r)}[λ]` on RoCK partitions.
pub fn linear_domino_cases(bound: usize) -> Vec<Case> {
    let mut inputs = Vec::new();
    for (c, q, l) in rock_partitions(bound) {
        for r in 1..=q.size() {
            inputs.push((c, q.clone(), l.clone(), r));
        }
    }
    par::map(&inputs, |(c, q, l, r)| {
        let eps = (c + 1) % 2;
        Case::of(
            format!("e_{}^({r}) e_{eps}^({r}) [{l}]", 1 - eps),
            (|| {
                let got = apply_e(1 - eps, *r, &apply_e(eps, *r, &CharVector::specht(l)));
                let mut want = CharVector::zero(Basis::linear(), l.size() - 2 * r);
                for m in Bipartition::all(q.size() - r) {
                    if harpoon(&m, q) {
                        let mu = from_core_quotient(&staircase(*c), &m.comp0, &m.comp1)?;
                        want.add_term(CharLabel::Specht(mu), &Scalar::one())?;
                    }
                }
                Ok((want.to_string(), got.to_string()))
            })(),
        )
    })
}

/// `(γ + 4σ) ⊔ 2η`, or `None` when `σ` has more parts than `γ`.
pub fn rock_strict(gamma: &StrictPartition, sigma: &Partition, eta: &StrictPartition) -> Option<StrictPartition> {
    if sigma.len() > gamma.len() {
        return None;
    }
    let odd: Vec<usize> = (1..=gamma.len()).map(|i| gamma.part(i) + 4 * sigma.part(i)).collect();
    let odd = StrictPartition::new(odd).ok()?;
    odd.union(&eta.doubled_parts()).ok()
}

/// RoCK strict partitions `(γ̄_a + 4σ) ⊔ 2η` of size at most `bound`.
pub fn rock_strict_partitions(bound: usize) -> Vec<(usize, Partition, StrictPartition, StrictPartition)> {
    let mut out = Vec::new();
    for a in 0.. {
        let g = bar_staircase(a);
        if g.size() > bound {
            break;
        }
        let budget = a + 1;
        for s in 0..=budget / 2 {
            for sigma in partitions(s) {
                for e in 0..=budget - 2 * s {
                    for eta in strict_partitions(e) {
                        if let Some(alpha) = rock_strict(&g, &sigma, &eta) {
                            if alpha.size() <= bound {
                                out.push((a, sigma.clone(), eta, alpha));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `R_ε^{(d)}⟨⟨(γ̄_a + 4σ) ⊔ 2η⟩⟩` for RoCK input, as the sum of
/// `K(σ, τ)·B(η, θ)⟨⟨(γ̄_a + 4τ) ⊔ 2θ⟩⟩` over `2|τ| + |θ| = w + d`.
pub fn spin_rock_prediction(a: usize, sigma: &Partition, eta: &StrictPartition, d: i64) -> Result<CharVector> {
    let g = bar_staircase(a);
    let target = 2 * sigma.size() as i64 + eta.size() as i64 + d;
    let n = (g.size() as i64 + 2 * target).max(0) as usize;
    let mut v = CharVector::zero(Basis::Spin, n);
    if target < 0 {
        return Ok(v);
    }
    let target = target as usize;
    for t in 0..=target / 2 {
        for tau in partitions(t) {
            let k = k_count(sigma, &tau);
            if k == 0 {
                continue;
            }
            for theta in strict_partitions(target - 2 * t) {
                let b = b_closed(eta, &theta);
                if b.is_zero() {
                    continue;
                }
                let beta = rock_strict(&g, &tau, &theta)
                    .ok_or_else(|| Error::Consistency(format!("τ={tau} does not fit γ̄_{a}")))?;
                v.add_term(CharLabel::Spin(beta), &(&b * &Scalar::from_int(k as i64)))?;
            }
        }
    }
    Ok(v)
}

pub fn spin_rock_cases(bound: usize) -> Vec<Case> {
    let mut inputs = Vec::new();
    for (a, sigma, eta, alpha) in rock_strict_partitions(bound) {
        let w = 2 * sigma.size() as i64 + eta.size() as i64;
        for d in -3i64..=3 {
            if w.max(w + d) <= a as i64 + 1 {
                inputs.push((a, sigma.clone(), eta.clone(), alpha.clone(), d));
            }
        }
    }
    par::map(&inputs, |(a, sigma, eta, alpha, d)| {
        Case::of(
            format!("R_{}^({d}) ⟨⟨{alpha}⟩⟩", (a + 1) % 2),
            (|| {
                let (core, _) = four_bar_core(alpha);
                if core != bar_staircase(*a) {
                    return Err(Error::Consistency(format!("4-bar-core of {alpha} is {core}")));
                }
                let got = quot_red((a + 1) % 2, *d, &CharVector::spin(alpha))?;
                Ok((spin_rock_prediction(*a, sigma, eta, *d)?.to_string(), got.to_string()))
            })(),
        )
    })
}

/// `e_ε̄^{(r)} e_ε^{(r)}⟨⟨α⟩⟩` for RoCK `α`, with `ε ≡ ℓ(dbl γ) + 1`.
pub fn spin_domino_cases(bound: usize) -> Vec<Case> {
    let mut inputs = Vec::new();
    for (a, sigma, eta, alpha) in rock_strict_partitions(bound) {
        let w = 2 * sigma.size() + eta.size();
        for r in 1..=w {
            inputs.push((a, sigma.clone(), eta.clone(), alpha.clone(), r));
        }
    }
    par::map(&inputs, |(a, sigma, eta, alpha, r)| {
        let eps = (a + 1) % 2;
        Case::of(
            format!("e_{}^({r}) e_{eps}^({r}) ⟨⟨{alpha}⟩⟩", 1 - eps),
            (|| {
                let got = apply_e(1 - eps, *r, &apply_e(eps, *r, &CharVector::spin(alpha)));
                let g = bar_staircase(*a);
                let mut want = CharVector::zero(Basis::Spin, alpha.size() - 2 * r);
                let w = 2 * sigma.size() + eta.size();
                for t in 0..=(w - r) / 2 {
                    for tau in partitions(t) {
                        for theta in strict_partitions(w - r - 2 * t) {
                            let from = Bipartition::new(theta.as_partition(), tau.clone());
                            let to = Bipartition::new(eta.as_partition(), sigma.clone());
                            if harpoon(&from, &to) {
                                let beta = rock_strict(&g, &tau, &theta).ok_or_else(|| {
                                    Error::Consistency(format!("τ={tau} does not fit γ̄_{a}"))
                                })?;
                                want.add_term(CharLabel::Spin(beta), &sqrt2_pow(kom(eta, &theta) as i64))?;
                            }
                        }
                    }
                }
                Ok((want.to_string(), got.to_string()))
            })(),
        )
    })
}

/// `R` on the staircase families `C(δ_a; δ_r, δ_s)` and `γ̄_a ⊔ 2(δ_r + δ_s)`, sizes up to `bound`.
pub fn quot_red_application(bound: usize) -> Vec<Case> {
    let mut triples = Vec::new();
    for s in 1..=bound {
        for r in 0..s {
            for a in 0..=bound {
                if 2 * (a + 1) < r * (r + 1) + s * (s + 1) {
                    continue;
                }
                triples.push((a, r, s));
            }
        }
    }
    let linear: Vec<_> = triples
        .iter()
        .filter(|(a, r, s)| staircase(*a).size() + 2 * (staircase(*r).size() + staircase(*s).size()) <= bound)
        .copied()
        .collect();
    let spin: Vec<_> = triples
        .iter()
        .filter(|(a, r, s)| bar_staircase(*a).size() + 2 * (staircase(*r).size() + staircase(*s).size()) <= bound)
        .copied()
        .collect();
    let mut cases = par::map(&linear, |&(a, r, s)| {
        Case::of(
            format!("linear a={a} r={r} s={s}"),
            (|| {
                let l = from_core_quotient(&staircase(a), &staircase(r), &staircase(s))?;
                let got = quot_red((a + 1) % 2, -((s - r - 1) as i64), &CharVector::specht(&l))?;
                let want = from_core_quotient(&staircase(a), &staircase(r + 1), &staircase(s - 1))?;
                Ok((pm(CharLabel::Specht(want)), up_to_sign(&got, &Scalar::one())))
            })(),
        )
    });
    cases.extend(par::map(&spin, |&(a, r, s)| {
        Case::of(
            format!("spin a={a} r={r} s={s}"),
            (|| {
                let alpha = glue(a, &staircase_sum(r, s));
                let got = quot_red((a + 1) % 2, -((s - r - 1) as i64), &CharVector::spin(&alpha))?;
                let want = pm(CharLabel::Spin(glue(a, &staircase_sum(r + 1, s - 1))));
                // s = r + 1 is the d = 0 case, where the coefficient is ±1
                if s == r + 1 {
                    return Ok((want, up_to_sign(&got, &Scalar::one())));
                }
                Ok((want.replacen('±', "±√2·", 1), up_to_sign(&got, &Scalar::sqrt2()).replacen('±', "±√2·", 1)))
            })(),
        )
    }));
    cases
}

fn quot_red_cases(max_n: usize) -> Vec<Case> {
    let bound = max_n.min(14);
    let mut cases = linear_rock_cases(bound);
    cases.extend(linear_domino_cases(bound));
    cases.extend(spin_rock_cases(bound));
    cases.extend(spin_domino_cases(bound));
    cases.extend(quot_red_application(16.max(max_n)));
    cases.push(Case::of(
        "R_1^(-1) [6,3]",
        quot_red(1, -1, &CharVector::specht(&part(&[6, 3]))).map(|v| ("−[4,1,1,1]".into(), v.to_string())),
    ));
    cases.push(Case::of(
        "R_1^(-1) ⟨⟨4,3,2⟩⟩",
        quot_red(1, -1, &CharVector::spin(&strict(&[4, 3, 2]))).map(|v| ("−√2·⟨⟨4,3⟩⟩".into(), v.to_string())),
    ));
    cases
}

/// Signed interm sums out of `(δ_r, δ_s)` for `r < s ≤ max_s`.
pub fn bicore_cases(max_s: usize) -> Vec<Case> {
    let mut pairs = Vec::new();
    for s in 1..=max_s {
        for r in 0..s {
            pairs.push((r, s));
        }
    }
    par::map(&pairs, |&(r, s)| {
        let from = Bipartition::new(staircase(r), staircase(s));
        let target = Bipartition::new(staircase(r + 1), staircase(s - 1));
        let nonzero: Vec<String> = Bipartition::all(target.size())
            .iter()
            .filter_map(|m| {
                let v = interm_sum(&from, m);
                (v != 0).then(|| format!("{m}: {v}"))
            })
            .collect();
        Case::new(
            format!("r={r} s={s}"),
            format!("{target}: {}", sign_of(r + 1)),
            nonzero.join("; "),
        )
    })
}

/// `B` by brute force, by column stripping and in closed form.
pub fn b_cases(bound: usize) -> Vec<Case> {
    let all = all_strict(bound);
    par::map(&all, |eta| {
        let mut want = Vec::new();
        let mut got = Vec::new();
        for theta in &all {
            let c = b_closed(eta, theta);
            let b = b_bruteforce(eta, theta);
            let k = b_by_columns(eta, theta);
            if !c.is_zero() || !b.is_zero() || !k.is_zero() {
                want.push(format!("{theta}: {c}/{c}"));
                got.push(format!("{theta}: {b}/{k}"));
            }
        }
        Case::new(format!("η={eta}"), want.join("; "), got.join("; "))
    })
}

/// The column-removal step on `η = (7,6,2,1)`, `θ = (6,5,3,1)`.
pub fn column_removal_case() -> Case {
    let eta = strict(&[7, 6, 2, 1]);
    let theta = strict(&[6, 5, 3, 1]);
    let (ce, ct) = (remove_first_column(&eta), remove_first_column(&theta));
    let zetas = interm0(&eta, &theta);
    let summands = join(zetas.iter().rev().map(|z| b_summand(z, &eta, &theta)));
    let ratios: Vec<String> = interm0(&ce, &ct)
        .iter()
        .rev()
        .map(|delta| {
            let lifted = zetas
                .iter()
                .filter(|z| remove_first_column(z) == *delta)
                .fold(Scalar::zero(), |acc, z| acc + b_summand(z, &eta, &theta));
            match lifted.checked_div(&b_summand(delta, &ce, &ct)) {
                Ok(q) => q.to_string(),
                Err(e) => e.to_string(),
            }
        })
        .collect();
    Case::new(
        "η=(7,6,2,1) θ=(6,5,3,1)",
        "-4; 8; -4; 8; -16; 8; -4; 8; -4 | -1 -1 -1 -1 -1 -1 | 0 = -0",
        format!(
            "{summands} | {} | {} = -{}",
            ratios.join(" "),
            b_bruteforce(&eta, &theta),
            b_bruteforce(&ce, &ct)
        ),
    )
}

fn interm_cases(max_n: usize) -> Vec<Case> {
    let mut cases = bicore_cases(4);
    cases.extend(b_cases(max_n.min(10)));
    cases.push(column_removal_case());
    cases
}

fn symfunc_cases(max_n: usize) -> Vec<Case> {
    let mut pairs = Vec::new();
    for r in 0.. {
        if staircase(r).size() > max_n {
            break;
        }
        for s in 0.. {
            if staircase(r).size() + staircase(s).size() > max_n {
                break;
            }
            pairs.push((r, s));
        }
    }
    let mut cases = par::map(&pairs, |&(r, s)| {
        let (a, b) = (staircase(r), staircase(s));
        let sum = StrictPartition::try_from(a.add(&b)).expect("δ_r + δ_s is strict");
        Case::new(format!("P_{{{sum}}} vs s_{{{a}}} s_{{{b}}}"), &schur_s(&a) * &schur_s(&b), schur_p(&sum))
    });
    let ns: Vec<usize> = (1..=max_n.min(10)).collect();
    cases.extend(par::map(&ns, |&n| {
        Case::of(
            format!("Murnaghan–Nakayama vs Schur transition, n={n}"),
            (|| {
                let mut bad = Vec::new();
                for l in partitions(n) {
                    let s = schur_s(&l);
                    for nu in partitions(n) {
                        let oracle = s.coeff(&nu) * BigRational::from_integer(z(&nu));
                        let mn = BigRational::from_integer(BigInt::from(specht_value(&l, &nu)?));
                        if oracle != mn {
                            bad.push(format!("χ^{l}({nu})"));
                        }
                    }
                }
                Ok((String::new(), bad.join(" ")))
            })(),
        )
    }));
    let small: Vec<StrictPartition> = all_strict(max_n.min(6));
    let v4 = crate::symfunc::variables::vandermonde(4);
    cases.extend(par::map(&small, |a| {
        use crate::symfunc::variables::{specialise, vandermonde_times_schur_p};
        let lhs = specialise(&schur_p(a), 4).mul(&v4);
        let ok = lhs == vandermonde_times_schur_p(a, 4);
        Case::new(format!("P_{{{a}}} in 4 variables"), true, ok)
    }));
    cases
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn degree_cases(max_n: usize) -> Vec<Case> {
    let ns: Vec<usize> = (1..=max_n).collect();
    let mut cases = par::map(&ns, |&n| {
        let lin: BigInt = partitions(n).iter().map(|l| specht_degree(l).pow(2)).sum();
        let mut spin = Scalar::zero();
        for a in strict_partitions(n) {
            let d = spin_degree(&a);
            spin += &(&d * &d);
        }
        let nf = factorial(n);
        Case::new(format!("degree sums n={n}"), format!("{nf} {nf}"), format!("{lin} {spin}"))
    });
    let labels = all_strict(max_n.min(12));
    cases.extend(par::map(&labels, |a| {
        Case::of(
            format!("integrality ⟨⟨{a}⟩⟩"),
            spin_brauer(a).map(|v| {
                let bad = join(v.values.iter().filter(|(_, x)| !x.is_integer_or_integer_sqrt2()).map(|(nu, x)| format!("{nu}: {x}")));
                (String::new(), bad)
            }),
        )
    }));
    cases
}

fn weight_class(n: usize, k: usize, w: usize) -> Partition {
    let mut v = vec![k; w];
    v.extend(vec![1; n - k * w]);
    Partition::from_unsorted(v)
}

/// Largest `w` such that the Brauer vector is non-zero on `(k^w, 1^{n−kw})`.
fn support_weight(values: &[(Partition, Scalar)], n: usize, k: usize) -> usize {
    (0..=n / k)
        .rev()
        .find(|&w| {
            let cls = weight_class(n, k, w);
            values.iter().any(|(nu, x)| *nu == cls && !x.is_zero())
        })
        .unwrap_or(0)
}

/// Vanishing beyond the `k`-(bar-)weight and non-vanishing at it.
fn support_ok(values: &[(Partition, Scalar)], n: usize, k: usize, w: usize) -> bool {
    let count = |nu: &Partition| nu.parts().iter().filter(|&&p| p == k).count();
    values.iter().all(|(nu, x)| count(nu) <= w || x.is_zero()) && support_weight(values, n, k) == w
}

/// Vanishing and non-vanishing at the `k`-(bar-)weight for odd `k`.
pub fn support_cases(bound: usize) -> Vec<Case> {
    let linear = all_partitions(bound).into_iter().filter(|l| !l.is_empty()).collect::<Vec<_>>();
    let spin = all_strict(bound).into_iter().filter(|a| !a.is_empty()).collect::<Vec<_>>();
    let mut cases = par::map(&linear, |l| {
        let v = linear_brauer(l);
        let n = l.size();
        let bad: Vec<usize> = (1..=n).step_by(2).filter(|&k| !support_ok(&v.values, n, k, k_weight(l, k))).collect();
        Case::new(format!("support [{l}]"), "", join(bad))
    });
    cases.extend(par::map(&spin, |a| {
        Case::of(
            format!("support ⟨⟨{a}⟩⟩"),
            (|| {
                let v = spin_brauer(a)?;
                let n = a.size();
                let mut bad = Vec::new();
                for k in (1..=n).step_by(2) {
                    if !support_ok(&v.values, n, k, odd_bar_core(a, k)?.1) {
                        bad.push(k);
                    }
                }
                Ok((String::new(), join(bad)))
            })(),
        )
    }));
    cases
}

fn proportional_labels(alpha: &StrictPartition, lambda: &Partition) -> Result<bool> {
    Ok(proportional(&spin_brauer(alpha)?, &linear_brauer(lambda)).is_some())
}

/// The consequences of proportionality on one scanned pair.
fn consequence_failures(p: &ScanPair) -> Result<Vec<String>> {
    let (alpha, lambda) = (&p.alpha, &p.lambda);
    let n = alpha.size();
    let mut bad = Vec::new();
    if regularize2(lambda) != regularize2(&double(alpha)) {
        bad.push("regularisation".to_string());
    }
    for k in (1..=n).step_by(2) {
        if k_weight(lambda, k) != odd_bar_core(alpha, k)?.1 {
            bad.push(format!("{k}-weight"));
        }
    }
    if let Some((k, rest)) = largest_odd_bar(alpha) {
        let hooks = rim_hooks(lambda, k);
        if hooks.len() != 1 {
            bad.push(format!("{} {k}-rim-hooks", hooks.len()));
        } else if !proportional_labels(&rest, &hooks[0].result)? {
            bad.push("largest odd bar".to_string());
        }
    }
    for eps in 0..2 {
        if !proportional_labels(&spin_restrict_all(alpha, eps), &restrict_all(lambda, eps))? {
            bad.push(format!("descent ε={eps}"));
        }
    }
    if content(lambda) != spin_content(alpha) {
        bad.push("content".to_string());
    }
    if two_core(lambda) != double(&four_bar_core(alpha).0) {
        bad.push("cores".to_string());
    }
    Ok(bad)
}

/// `S` and `R` applied to both sides of a proportional pair keep them proportional
/// with the same ratio after restriction to odd classes.
fn commutation_failures(p: &ScanPair) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let spin = CharVector::spin(&p.alpha);
    let lin = CharVector::specht(&p.lambda);
    for eps in 0..2 {
        for c in -2i64..=2 {
            let lhs = brauer_of(&runner_swap(eps, c, &spin)?)?;
            let rhs = brauer_of(&runner_swap(eps, c, &lin)?.scaled(&p.ratio))?;
            if lhs != rhs {
                bad.push(format!("S_{eps}^({c})"));
            }
        }
        for d in -1i64..=1 {
            let lhs = brauer_of(&quot_red(eps, d, &spin)?)?;
            let rhs = brauer_of(&quot_red(eps, d, &lin)?.scaled(&p.ratio))?;
            if lhs != rhs {
                bad.push(format!("R_{eps}^({d})"));
            }
        }
    }
    Ok(bad)
}

pub fn s4_golden_case() -> Case {
    Case::of(
        "decomposition data for the double cover of S_4",
        (|| {
            let s4 = spin_brauer(&strict(&[4]))?;
            let ratio = proportional(&s4, &linear_brauer(&part(&[2, 2])));
            let s31 = spin_brauer(&strict(&[3, 1]))?;
            let partners = partitions(4).iter().filter(|l| proportional(&s31, &linear_brauer(l)).is_some()).count();
            Ok((
                "√2 | 0 | 4".to_string(),
                format!(
                    "{} | {partners} | {}",
                    ratio.map(|r| r.to_string()).unwrap_or_else(|| "none".into()),
                    spin_degree(&strict(&[3, 1]))
                ),
            ))
        })(),
    )
}

/// Consequences of proportionality on every predicted pair with `n ≤ max_n`.
pub fn consequence_cases(max_n: usize) -> Vec<Case> {
    let pairs: Vec<ScanPair> = (1..=max_n).flat_map(expected_scan).collect();
    par::map(&pairs, |p| {
        Case::of(
            format!("consequences ⟨⟨{}⟩⟩ ~ [{}]", p.alpha, p.lambda),
            consequence_failures(p).map(|bad| (String::new(), bad.join(" "))),
        )
    })
}

/// Operators commute with proportionality on predicted pairs with `n ≤ max_n`.
pub fn commutation_cases(max_n: usize) -> Vec<Case> {
    let pairs: Vec<ScanPair> = (1..=max_n).flat_map(expected_scan).collect();
    par::map(&pairs, |p| {
        Case::of(
            format!("commutation ⟨⟨{}⟩⟩ ~ [{}]", p.alpha, p.lambda),
            commutation_failures(p).map(|bad| (String::new(), bad.join(" "))),
        )
    })
}

fn invariant_cases(max_n: usize) -> Vec<Case> {
    let mut cases = vec![s4_golden_case()];
    cases.extend(support_cases(max_n.min(12)));
    cases.extend(consequence_cases(max_n));
    cases.extend(commutation_cases(max_n.min(10)));
    cases
}
