//! One test per acceptance criterion. Each prints a single pass/fail line,
//! written straight to stderr so it shows without `--nocapture`.

use std::io::Write;

use spinbrauer::charspace::{quot_red, runner_swap, CharVector};
use spinbrauer::charvalues::{linear_brauer, proportional, spin_brauer, spin_degree};
use spinbrauer::partition::{part, partitions, strict};
use spinbrauer::verify::{self, run, Case, Suite};
use spinbrauer::Scalar;

fn check(id: u32, what: &str, cases: Vec<Case>) {
    let failed: Vec<&Case> = cases.iter().filter(|c| !c.pass).collect();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "criterion {id:>2}: {status}  {what} ({} cases, {} failed)", cases.len(), failed.len());
    for c in failed.iter().take(5) {
        let _ = writeln!(err, "    {}: expected {} got {}", c.input, c.expected, c.actual);
    }
    assert!(failed.is_empty(), "criterion {id} failed");
}

fn suite(s: Suite, max_n: usize) -> Vec<Case> {
    run(s, max_n).unwrap().cases
}

fn example(input: &str, expected: &str, actual: impl ToString) -> Case {
    Case::new(input, expected, actual.to_string())
}

#[test]
fn criterion_01_proportional_pairs() {
    check(1, "scan equals predicted pairs for n <= 14", suite(Suite::Main, 14));
}

#[test]
fn criterion_02_equality_cases() {
    check(2, "pairs with e <= 1 equal the equality cases for n <= 14", suite(Suite::Equality, 14));
}

#[test]
fn criterion_03_s4_golden() {
    let s4 = spin_brauer(&strict(&[4])).unwrap();
    let s31 = spin_brauer(&strict(&[3, 1])).unwrap();
    let lin22 = linear_brauer(&part(&[2, 2]));
    let partners = partitions(4).iter().filter(|l| proportional(&s31, &linear_brauer(l)).is_some()).count();
    let cases = vec![
        example("⟨⟨4⟩⟩ = √2·[2,2]", "true", s4.values == lin22.scaled(&Scalar::sqrt2()).values),
        example("⟨⟨3,1⟩⟩ Specht partners", "0", partners),
        example("deg ⟨⟨3,1⟩⟩", "4", spin_degree(&strict(&[3, 1]))),
        verify::s4_golden_case(),
    ];
    check(3, "double cover of S_4", cases);
}

#[test]
fn criterion_04_runner_swap_linear() {
    let mut cases = verify::linear_swap_sweep(12);
    cases.extend(verify::linear_swap_application(16));
    let v = runner_swap(1, -2, &CharVector::specht(&part(&[6, 3, 1, 1]))).unwrap();
    cases.push(example("S_1^(-2) [6,3,1,1]", "−[5,2,2]", v));
    check(4, "linear runner swap sweep, specialisation and example", cases);
}

#[test]
fn criterion_05_runner_swap_spin() {
    let mut cases = verify::spin_swap_sweep(12);
    cases.extend(verify::spin_swap_transport(16));
    cases.extend(verify::spin_swap_application(16));
    let v = runner_swap(1, -2, &CharVector::spin(&strict(&[6, 3, 2]))).unwrap();
    cases.push(example("S_1^(-2) ⟨⟨6,3,2⟩⟩", "−⟨⟨6,2,1⟩⟩", v));
    check(5, "spin runner swap sweep, staircase family and example", cases);
}

#[test]
fn criterion_06_quotient_redistribution() {
    let mut cases = verify::spin_rock_cases(14);
    cases.extend(verify::spin_domino_cases(14));
    cases.extend(verify::linear_rock_cases(14));
    cases.extend(verify::linear_domino_cases(14));
    cases.extend(verify::quot_red_application(16));
    let lin = quot_red(1, -1, &CharVector::specht(&part(&[6, 3]))).unwrap();
    cases.push(example("R_1^(-1) [6,3]", "−[4,1,1,1]", lin));
    let spin = quot_red(1, -1, &CharVector::spin(&strict(&[4, 3, 2]))).unwrap();
    cases.push(example("R_1^(-1) ⟨⟨4,3,2⟩⟩", "−√2·⟨⟨4,3⟩⟩", spin));
    check(6, "RoCK quotient redistribution, applications and examples", cases);
}

#[test]
fn criterion_07_interm() {
    let mut cases = verify::bicore_cases(4);
    cases.extend(verify::b_cases(10));
    cases.push(verify::column_removal_case());
    check(7, "bicore interm sums, B closed form, column removal", cases);
}

#[test]
fn criterion_08_symmetric_functions() {
    check(8, "P_(σ+τ) = s_σ s_τ, character transition, Pfaffian", suite(Suite::Symfunc, 12));
}

#[test]
fn criterion_09_degrees() {
    check(9, "degree sums for n <= 14 and integrality for n <= 12", suite(Suite::Degrees, 14));
}

#[test]
fn criterion_10_support() {
    check(10, "k-weight support for labels of size <= 12", verify::support_cases(12));
}

#[test]
fn criterion_11_consequences() {
    check(11, "consequences of proportionality for n <= 14", verify::consequence_cases(14));
}

#[test]
fn criterion_12_odd_p_runner_swap() {
    let (want, got) = verify::odd_p_example().unwrap();
    let displayed = got.split(" | ").next().unwrap_or_default().to_string();
    let cases = vec![
        example("p=5 displayed expansion of S_2^(1) [9,8,5,1^5]", "−[9,9,4,1,1,1,1,1,1]", displayed),
        Case::new("p=5 displayed expansion and defining sum", want, got),
    ];
    check(12, "p = 5 runner swap example", cases);
}
