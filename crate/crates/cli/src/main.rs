//! `golden`: tables, expansions, Carlitz matrices and identity sweeps.
//!
//! Exit status is 0 on success, 1 when an identity fails, 2 on usage or I/O errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use golden_core::carlitz::{build_carlitz, char_poly, det_invariant, mat_pow, trace_invariant};
use golden_core::goldpoly::{
    collapse_rational, golden_binomial, golden_binomial_product_form, golden_poly_p,
    quadratic_factor_form,
};
use golden_core::ring::parse_rational;
use golden_core::sequences::{fib, fib_divisor, fibonomial};
use golden_core::verify::{parse_suites, run_suites, SweepLimits, VerificationReport};
use golden_core::{GoldenInt, GoldenRational, IntMatrix};

#[derive(Parser)]
#[command(name = "golden", version, about = "Exact golden (Fibonacci) calculus tables and identity checks")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(flatten)]
    caps: Caps,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Caps {
    /// Largest Carlitz matrix order accepted.
    #[arg(long, default_value_t = 16, global = true)]
    order_cap: u64,

    /// Largest index, exponent or degree accepted.
    #[arg(long, default_value_t = 60, global = true)]
    n_cap: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Fibonacci numbers, the Fibonomial triangle, or Fibonacci divisors.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// First index (fibonacci and fib-divisor).
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
        /// Last index, or last row of the triangle.
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        to: i64,
        /// Divisor step for fib-divisor.
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
    /// Golden binomial (x - a)^n_F, its product form, or the golden polynomial P_n.
    Expand {
        n: u64,
        /// Rational parameter as p or p/q.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value_t = Form::Expansion)]
        form: Form,
        /// Also list the factors.
        #[arg(long)]
        factors: bool,
    },
    /// Carlitz matrices, their characteristic polynomials, powers and invariants.
    Carlitz {
        #[arg(value_enum)]
        action: CarlitzAction,
        #[arg(long)]
        order: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
    /// Run identity sweeps and emit a report.
    Verify {
        /// ring, pascal, binomial, derivative, carlitz, analytic or all.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        max_k: Option<u64>,
        #[arg(long)]
        max_degree: Option<u64>,
        /// Seed for the randomised checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Fibonacci,
    Fibonomial,
    FibDivisor,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Form {
    Expansion,
    Product,
    #[value(name = "p", alias = "P")]
    P,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CarlitzAction {
    Build,
    Charpoly,
    Power,
    Invariants,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<golden_core::Error> for Failure {
    fn from(e: golden_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Rendered output and whether every identity it reports held.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => match emit(&cli, &out.text) {
            Ok(()) if out.ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(Failure::Io(msg) | Failure::Usage(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
        Err(Failure::Usage(msg) | Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Table { kind, from, to, k } => table(cli, *kind, *from, *to, *k),
        Command::Expand { n, a, form, factors } => expand(cli, *n, a, *form, *factors),
        Command::Carlitz { action, order, k } => carlitz(cli, *action, *order, *k),
        Command::Verify {
            suite,
            max_n,
            max_k,
            max_degree,
            seed,
        } => {
            let limits = SweepLimits {
                max_n: *max_n,
                max_k: *max_k,
                max_degree: *max_degree,
                seed: *seed,
            };
            verify(cli, suite, limits)
        }
    }
}

fn within(what: &str, value: u64, cap: u64) -> Result<(), Failure> {
    if value > cap {
        Err(Failure::Usage(format!(
            "{what} = {value} exceeds the cap of {cap} (raise it with --n-cap or --order-cap)"
        )))
    } else {
        Ok(())
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn bracketed<T: ToString>(v: &[T]) -> String {
    format!("[{}]", strings(v).join(", "))
}

fn table(cli: &Cli, kind: TableKind, from: i64, to: i64, k: u64) -> Result<Output, Failure> {
    within("|from|", from.unsigned_abs(), cli.caps.n_cap)?;
    within("|to|", to.unsigned_abs(), cli.caps.n_cap)?;
    within("k", k, cli.caps.n_cap)?;
    if kind == TableKind::Fibonomial {
        if to < 0 {
            return Err(Failure::Usage("the last triangle row must be >= 0".into()));
        }
        let rows: Vec<Vec<BigInt>> = (0..=to as u64)
            .map(|n| (0..=n).map(|j| fibonomial(n, j)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        let text = match cli.format {
            Format::Pretty => rows.iter().map(|r| strings(r).join(" ") + "\n").collect(),
            Format::Csv => {
                let mut s = String::from("n,k,value\n");
                for (n, r) in rows.iter().enumerate() {
                    for (j, v) in r.iter().enumerate() {
                        let _ = writeln!(s, "{n},{j},{v}");
                    }
                }
                s
            }
            Format::Json => pretty_json(&json!({
                "kind": "fibonomial",
                "rows": rows.iter().map(|r| strings(r)).collect::<Vec<_>>(),
            })),
        };
        return Ok(Output::ok(text));
    }

    let values: Vec<(i64, BigInt)> = (from..=to)
        .map(|n| match kind {
            TableKind::Fibonacci => Ok((n, fib(n))),
            _ => fib_divisor(k, n).map(|v| (n, v)),
        })
        .collect::<Result<_, _>>()?;
    let (name, header) = match kind {
        TableKind::Fibonacci => ("fibonacci", "F_n".to_string()),
        _ => ("fib-divisor", format!("F^({k})_n")),
    };
    let text = match cli.format {
        Format::Pretty => {
            let width = values.iter().map(|(n, _)| n.to_string().len()).max().unwrap_or(1).max(1);
            let mut s = format!("{:>width$}  {header}\n", "n");
            for (n, v) in &values {
                let _ = writeln!(s, "{n:>width$}  {v}");
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (n, v) in &values {
                let _ = writeln!(s, "{n},{v}");
            }
            s
        }
        Format::Json => {
            let mut doc = json!({
                "kind": name,
                "values": values.iter().map(|(n, v)| json!({"n": n, "value": v.to_string()})).collect::<Vec<_>>(),
            });
            if kind == TableKind::FibDivisor {
                doc["k"] = json!(k);
            }
            pretty_json(&doc)
        }
    };
    Ok(Output::ok(text))
}

fn pretty_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn expand(cli: &Cli, n: u64, a: &str, form: Form, with_factors: bool) -> Result<Output, Failure> {
    within("n", n, cli.caps.n_cap)?;
    let a = parse_rational(a)?;
    let poly = match form {
        Form::Expansion => golden_binomial(n, &a),
        Form::Product => collapse_rational(&golden_binomial_product_form(n, &a))
            .expect("the product form has rational coefficients"),
        Form::P => golden_poly_p(n, &a),
    };
    let coefficients = poly.descending();
    let mut factors: Vec<String> = Vec::new();
    let mut scale = None;
    if with_factors {
        if form == Form::P {
            let q = quadratic_factor_form(n, &a);
            scale = Some(q.scale.clone());
            factors = q.factors.iter().map(ToString::to_string).collect();
        } else {
            factors = product_roots(n, &a)
                .iter()
                .map(|r| format!("x - ({r})"))
                .collect();
        }
    }

    let form_name = match form {
        Form::Expansion => "expansion",
        Form::Product => "product",
        Form::P => "p",
    };
    let text = match cli.format {
        Format::Pretty => {
            let mut s = format!("coefficients: {}\npolynomial: {poly}\n", bracketed(&coefficients));
            if with_factors {
                if let Some(scale) = &scale {
                    let _ = writeln!(s, "scale: {scale}");
                }
                for f in &factors {
                    let _ = writeln!(s, "factor: {f}");
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("degree,coefficient\n");
            let top = coefficients.len();
            for (i, c) in coefficients.iter().enumerate() {
                let _ = writeln!(s, "{},{c}", top - 1 - i);
            }
            s
        }
        Format::Json => {
            let mut doc = json!({
                "n": n,
                "a": a.to_string(),
                "form": form_name,
                "coefficients": strings(&coefficients),
                "polynomial": poly.to_string(),
            });
            if with_factors {
                doc["factors"] = json!(factors);
                if let Some(scale) = &scale {
                    doc["scale"] = json!(scale.to_string());
                }
            }
            pretty_json(&doc)
        }
    };
    Ok(Output::ok(text))
}

/// Roots `φʲφ′^{n−1−j}·a` of the product form.
fn product_roots(n: u64, a: &BigRational) -> Vec<GoldenRational> {
    let n = n as i64;
    (0..n)
        .map(|j| {
            let unit = &GoldenInt::phi_pow(j) * &GoldenInt::phi_conj_pow(n - 1 - j);
            &GoldenRational::from(unit) * &GoldenRational::from(a)
        })
        .collect()
}

fn matrix_text(m: &IntMatrix, format: Format) -> String {
    match format {
        Format::Pretty => format!("{}\n", m.to_string().trim_end()),
        Format::Csv => m
            .rows()
            .iter()
            .map(|r| strings(r).join(",") + "\n")
            .collect(),
        Format::Json => pretty_json(&serde_json::to_value(m).expect("json")),
    }
}

fn carlitz(cli: &Cli, action: CarlitzAction, order: u64, k: u64) -> Result<Output, Failure> {
    if order == 0 {
        return Err(Failure::Usage("order must be at least 1".into()));
    }
    within("order", order, cli.caps.order_cap)?;
    within("k", k, cli.caps.n_cap)?;
    let a = build_carlitz(order as usize)?;
    match action {
        CarlitzAction::Build => Ok(Output::ok(matrix_text(&a, cli.format))),
        CarlitzAction::Power => Ok(Output::ok(matrix_text(&mat_pow(&a, k), cli.format))),
        CarlitzAction::Charpoly => {
            let q = char_poly(&a);
            let c = q.descending();
            let text = match cli.format {
                Format::Pretty => format!("{}\n{q}\n", bracketed(&c)),
                Format::Csv => strings(&c).join(",") + "\n",
                Format::Json => pretty_json(&json!({
                    "order": order,
                    "coefficients": strings(&c),
                    "polynomial": q.to_string(),
                })),
            };
            Ok(Output::ok(text))
        }
        CarlitzAction::Invariants => {
            let (det, det_expected) = det_invariant(order as usize, k)?;
            let trace = if k == 0 {
                None
            } else {
                Some(trace_invariant(order as usize, k)?)
            };
            let charpoly_matches = char_poly(&a).poly().map(|c| BigRational::from_integer(c.clone()))
                == golden_binomial(order, &BigRational::one());
            let ok = det == det_expected && trace.as_ref().is_none_or(|(t, d)| t == d) && charpoly_matches;
            let trace_pair = trace.as_ref().map(|(t, d)| (t.to_string(), d.to_string()));
            let text = match cli.format {
                Format::Pretty => {
                    let mut s = String::new();
                    if let Some((t, d)) = &trace_pair {
                        let _ = writeln!(s, "trace: {t} (expected {d})");
                    }
                    let _ = writeln!(s, "det: {det} (expected {det_expected})");
                    let _ = writeln!(s, "charpoly equals golden binomial: {charpoly_matches}");
                    s
                }
                Format::Csv => {
                    let mut s = String::from("invariant,value,expected\n");
                    if let Some((t, d)) = &trace_pair {
                        let _ = writeln!(s, "trace,{t},{d}");
                    }
                    let _ = writeln!(s, "det,{det},{det_expected}");
                    let _ = writeln!(s, "charpoly,{charpoly_matches},true");
                    s
                }
                Format::Json => pretty_json(&json!({
                    "order": order,
                    "k": k,
                    "trace": trace_pair.as_ref().map(|p| p.0.clone()),
                    "trace_expected": trace_pair.as_ref().map(|p| p.1.clone()),
                    "det": det.to_string(),
                    "det_expected": det_expected.to_string(),
                    "charpoly_matches": charpoly_matches,
                })),
            };
            Ok(Output { text, ok })
        }
    }
}

fn verify(cli: &Cli, suite: &[String], limits: SweepLimits) -> Result<Output, Failure> {
    let suites = parse_suites(suite)?;
    if suites.is_empty() {
        return Err(Failure::Usage("no suite selected".into()));
    }
    for (what, value) in [("max-n", limits.max_n), ("max-k", limits.max_k), ("max-degree", limits.max_degree)] {
        if let Some(v) = value {
            within(what, v, cli.caps.n_cap)?;
        }
    }
    if suites.contains(&golden_core::verify::Suite::Carlitz) {
        if let Some(v) = limits.max_n {
            within("max-n (Carlitz order)", v, cli.caps.order_cap)?;
        }
    }
    let report = run_suites(&suites, &limits);
    let text = report_text(&report, cli.format);
    Ok(Output {
        text,
        ok: report.passed(),
    })
}

fn report_text(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => pretty_json(&report.to_json()),
        Format::Csv => {
            let mut s = String::from("name,cases,failures,status,counterexample\n");
            for c in &report.checks {
                let status = if c.passed() { "pass" } else { "fail" };
                let ce = c
                    .counterexample
                    .as_ref()
                    .map(|v| format!("\"{}\"", v.to_string().replace('"', "\"\"")))
                    .unwrap_or_default();
                let _ = writeln!(s, "{},{},{},{status},{ce}", c.name, c.cases, c.failures);
            }
            s
        }
        Format::Pretty => {
            let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut s = String::new();
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{status}  {:<width$}  cases={} failures={}",
                    c.name, c.cases, c.failures
                );
                if let Some(ce) = &c.counterexample {
                    let _ = writeln!(s, "      counterexample: {ce}");
                }
            }
            let total: u64 = report.checks.iter().map(|c| c.cases).sum();
            let _ = writeln!(
                s,
                "{}: {} checks, {total} cases, {} failures, {} ms",
                report.suite,
                report.checks.len(),
                report.failures(),
                report.duration_ms
            );
            s
        }
    }
}
