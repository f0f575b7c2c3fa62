use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spinbrauer::abacus::two_quotient;
use spinbrauer::cache::{self, TableCache};
use spinbrauer::charspace::{apply_e, apply_f, quot_red, runner_swap, CharVector};
use spinbrauer::charvalues::{specht_degree, specht_value, spin_degree, spin_value, BrauerVector, CharLabel, CharTables};
use spinbrauer::classify::{fsas_decompose, lambda_of};
use spinbrauer::hooks::{four_bar_core, k_weight, odd_bar_core};
use spinbrauer::partition::{content, double, regularize2, spin_content};
use spinbrauer::verify::{run_with_cache, Suite};
use spinbrauer::{Error, Partition, Scalar, StrictPartition};

#[derive(Parser)]
#[command(name = "spinbrauer", version, about = "Specht and spin characters of symmetric groups on odd classes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Directory for cached character tables.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Partition,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValueBasis {
    Specht,
    Spin,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApplyBasis {
    Linear,
    Spin,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    #[value(name = "e")]
    E,
    #[value(name = "f")]
    F,
    #[value(name = "S")]
    S,
    #[value(name = "R")]
    R,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial data of a partition or strict partition.
    Info {
        #[arg(value_enum)]
        kind: Kind,
        /// Parts separated by commas, or `-` for the empty partition.
        label: String,
    },
    /// A single character value.
    Value {
        #[arg(value_enum)]
        basis: ValueBasis,
        label: String,
        /// Cycle type.
        class: String,
    },
    /// Apply an operator to a basis character.
    Apply {
        #[arg(value_enum)]
        op: Op,
        #[arg(long)]
        eps: usize,
        /// Divided power for `e` and `f`.
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Shift for `S`.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<i64>,
        /// Shift for `R`.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        #[arg(long, value_enum, default_value_t = ApplyBasis::Linear)]
        basis: ApplyBasis,
        /// Characteristic for the linear basis.
        #[arg(long, default_value_t = 2)]
        p: usize,
        label: String,
    },
    /// Run a verification suite.
    Verify {
        /// main, equality, runner-swap, runner-swap-spin, quot-red, interm,
        /// symfunc, degrees, invariants or all.
        suite: String,
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: usize,
    },
}

/// Rows of a key/value record; `Value` keeps the JSON form exact.
type Record = Vec<(&'static str, Value)>;

enum Failure {
    Usage(String),
    Verification,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(m) => Failure::Io(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let cache = cli.cache.as_ref().map(TableCache::new).transpose()?;
    let mut out = io::stdout().lock();
    match &cli.command {
        Command::Info { kind, label } => {
            let rec = match kind {
                Kind::Partition => partition_info(&label.parse()?),
                Kind::Strict => strict_info(&label.parse()?)?,
            };
            write_record(&mut out, cli.format, &rec)
        }
        Command::Value { basis, label, class } => {
            let nu: Partition = class.parse()?;
            let (label_text, v) = match basis {
                ValueBasis::Specht => {
                    let l: Partition = label.parse()?;
                    let v = lookup(cache.as_ref(), l.size(), &nu, |t| &t.linear, &CharLabel::Specht(l.clone()))?
                        .map(Ok)
                        .unwrap_or_else(|| specht_value(&l, &nu).map(Scalar::from_int))?;
                    (l.to_string(), v)
                }
                ValueBasis::Spin => {
                    let a: StrictPartition = label.parse()?;
                    let v = lookup(cache.as_ref(), a.size(), &nu, |t| &t.spin, &CharLabel::Spin(a.clone()))?
                        .map(Ok)
                        .unwrap_or_else(|| spin_value(&a, &nu))?;
                    (a.to_string(), v)
                }
            };
            let basis = match basis {
                ValueBasis::Specht => "specht",
                ValueBasis::Spin => "spin",
            };
            match cli.format {
                Format::Text => writeln!(out, "{v}")?,
                Format::Json => {
                    let j = json!({"basis": basis, "label": label_text, "class": nu.to_string(), "value": v});
                    writeln!(out, "{j}")?
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(["basis", "label", "class", "value"])?;
                    w.write_record([basis, &label_text, &nu.to_string(), &v.to_string()])?;
                    w.flush()?;
                }
            }
            Ok(())
        }
        Command::Apply { op, eps, r, c, d, basis, p, label } => {
            let v = match basis {
                ApplyBasis::Linear => {
                    if *eps >= *p {
                        return Err(Failure::Usage(format!("--eps must be below --p={p}")));
                    }
                    CharVector::specht_mod(&label.parse()?, *p)
                }
                ApplyBasis::Spin => {
                    if *eps > 1 || *p != 2 {
                        return Err(Failure::Usage("spin characters use p = 2 and ε ∈ {0, 1}".into()));
                    }
                    CharVector::spin(&label.parse()?)
                }
            };
            let need = |x: Option<i64>, flag: &str| x.ok_or_else(|| Failure::Usage(format!("{flag} is required")));
            let result = match op {
                Op::E => apply_e(*eps, *r, &v),
                Op::F => apply_f(*eps, *r, &v),
                Op::S => runner_swap(*eps, need(*c, "--c")?, &v)?,
                Op::R => quot_red(*eps, need(*d, "--d")?, &v)?,
            };
            write_vector(&mut out, cli.format, &result)
        }
        Command::Verify { suite, max_n } => {
            let suite: Suite = suite.parse()?;
            let report = run_with_cache(suite, *max_n, cache.as_ref())?;
            match cli.format {
                Format::Text => {
                    let failed: Vec<_> = report.failures().collect();
                    writeln!(
                        out,
                        "{} (max n {}): {} ({} cases, {} failed, {} ms)",
                        report.suite,
                        report.max_n,
                        if report.pass { "PASS" } else { "FAIL" },
                        report.cases.len(),
                        failed.len(),
                        report.millis
                    )?;
                    for c in failed {
                        writeln!(out, "FAIL {}\n  expected: {}\n  actual:   {}", c.input, c.expected, c.actual)?;
                    }
                }
                Format::Json => {
                    let s = serde_json::to_string(&report).map_err(|e| Failure::Io(e.to_string()))?;
                    writeln!(out, "{s}")?
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    for c in &report.cases {
                        w.serialize(c)?;
                    }
                    w.flush()?;
                }
            }
            if report.pass {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

/// Value from cached tables, when a cache is configured and `ν` is an odd class.
fn lookup(
    cache: Option<&TableCache>,
    n: usize,
    nu: &Partition,
    table: impl Fn(&CharTables) -> &Vec<BrauerVector>,
    label: &CharLabel,
) -> Result<Option<Scalar>, Failure> {
    let Some(c) = cache else { return Ok(None) };
    if nu.size() != n || nu.parts().iter().any(|p| p % 2 == 0) {
        return Ok(None);
    }
    let t = cache::tables(Some(c), n)?;
    Ok(table(&t).iter().find(|b| b.label == *label).and_then(|b| b.get(nu).cloned()))
}

fn pair(x: (usize, usize)) -> Value {
    json!([x.0, x.1])
}

fn odd_weights(n: usize, w: impl Fn(usize) -> Result<usize, Error>) -> Result<Value, Error> {
    let mut m = serde_json::Map::new();
    for k in (1..=n).step_by(2) {
        m.insert(k.to_string(), json!(w(k)?));
    }
    Ok(Value::Object(m))
}

fn partition_info(l: &Partition) -> Record {
    let (core, q0, q1) = two_quotient(l);
    let weight = (l.size() - core.size()) / 2;
    vec![
        ("partition", json!(l.to_string())),
        ("size", json!(l.size())),
        ("conjugate", json!(l.conjugate().to_string())),
        ("core", json!(core.to_string())),
        ("quotient", json!([q0.to_string(), q1.to_string()])),
        ("weight", json!(weight)),
        ("content", pair(content(l))),
        ("oddWeights", odd_weights(l.size(), |k| Ok(k_weight(l, k))).expect("infallible")),
        ("regularisation", json!(regularize2(l).to_string())),
        ("degree", json!(specht_degree(l).to_string())),
    ]
}

fn strict_info(a: &StrictPartition) -> Result<Record, Error> {
    let (core, w) = four_bar_core(a);
    let mut rec: Record = vec![
        ("strict", json!(a.to_string())),
        ("size", json!(a.size())),
        ("double", json!(double(a).to_string())),
        ("fourBarCore", json!(core.to_string())),
        ("fourBarWeight", json!(w)),
        ("spinContent", pair(spin_content(a))),
        ("oddBarWeights", odd_weights(a.size(), |k| odd_bar_core(a, k).map(|x| x.1))?),
        ("evenParts", json!(a.even_parts())),
        ("degree", json!(spin_degree(a).to_string())),
    ];
    match fsas_decompose(a) {
        Ok(dec) => {
            let (lam, conj) = lambda_of(a)?;
            rec.push(("fsas", json!(true)));
            rec.push(("ars", json!([dec.a, dec.r, dec.s])));
            rec.push(("lambda", json!([lam.to_string(), conj.to_string()])));
        }
        Err(Error::NotFsas(_)) => rec.push(("fsas", json!(false))),
        Err(e) => return Err(e),
    }
    Ok(rec)
}

fn text_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("({})", xs.iter().map(text_of).collect::<Vec<_>>().join("; ")),
        Value::Object(m) => m.iter().map(|(k, x)| format!("{k}:{}", text_of(x))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn write_record(out: &mut impl Write, format: Format, rec: &Record) -> Result<(), Failure> {
    match format {
        Format::Text => {
            for (k, v) in rec {
                writeln!(out, "{k}: {}", text_of(v))?;
            }
        }
        Format::Json => {
            let m: serde_json::Map<String, Value> = rec.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            writeln!(out, "{}", Value::Object(m))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["field", "value"])?;
            for (k, v) in rec {
                w.write_record([*k, &text_of(v)])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn write_vector(out: &mut impl Write, format: Format, v: &CharVector) -> Result<(), Failure> {
    match format {
        Format::Text => writeln!(out, "{v}")?,
        Format::Json => {
            let s = serde_json::to_string(v).map_err(|e| Failure::Io(e.to_string()))?;
            writeln!(out, "{s}")?
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["label", "coeff"])?;
            for (l, c) in v.terms() {
                w.write_record([l.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
