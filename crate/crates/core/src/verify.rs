//! Identity sweeps and their machine-readable report.
//!
//! Every check walks a fixed parameter grid (or a seeded random sample), counts
//! cases and failures, and keeps the first counterexample it meets. Checks run
//! in parallel; the report lists them sorted by name, so its body is identical
//! for identical inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::analytic::{
    check_cauchy_riemann, check_dbar, check_dbar_poly, check_laplace, complex_golden_binomial,
    complex_golden_product_rational, recombined_monomial,
};
use crate::carlitz::{
    a2_power_closed_form, a3_power_numerators, build_carlitz, char_poly, char_poly_bareiss,
    char_poly_cofactor, det_invariant, eigen_powers, power_sum_identity, trace_invariant,
    verify_charpoly_theorem,
};
use crate::golden_ring::{GoldenInt, GoldenRational};
use crate::goldpoly::{
    collapse_rational, golden_binomial, golden_binomial_product_form, golden_binomial_zeros,
    golden_derivative, golden_derivative_by_definition, golden_poly_p, golden_translate,
    quadratic_factor_form,
};
use crate::poly::Poly;
use crate::sequences::{
    divisor_power_form, fib, fib_divisor, fib_iterative, fibonomial, fibonomial_by_factorials,
    golden_pascal,
};
use crate::{Error, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ring,
    Pascal,
    Binomial,
    Derivative,
    Carlitz,
    Analytic,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Ring,
        Suite::Pascal,
        Suite::Binomial,
        Suite::Derivative,
        Suite::Carlitz,
        Suite::Analytic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::Pascal => "pascal",
            Suite::Binomial => "binomial",
            Suite::Derivative => "derivative",
            Suite::Carlitz => "carlitz",
            Suite::Analytic => "analytic",
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

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Expands a list of suite names, where `all` stands for every suite.
/// The result is sorted and deduplicated.
pub fn parse_suites<S: AsRef<str>>(names: &[S]) -> Result<Vec<Suite>, Error> {
    let mut out = Vec::new();
    for name in names {
        match name.as_ref() {
            "all" => out.extend(Suite::ALL),
            other => out.push(other.parse()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Overrides for the default sweep bounds. `None` keeps each check's default.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepLimits {
    pub max_n: Option<u64>,
    pub max_k: Option<u64>,
    pub max_degree: Option<u64>,
    pub seed: u64,
}

impl SweepLimits {
    fn n(&self, default: u64) -> u64 {
        self.max_n.unwrap_or(default)
    }
    fn k(&self, default: u64) -> u64 {
        self.max_k.unwrap_or(default)
    }
    fn degree(&self, default: u64) -> u64 {
        self.max_degree.unwrap_or(default)
    }
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub counterexample: Option<Value>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Value,
    pub checks: Vec<CheckResult>,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialises")
    }

    /// The report without `duration_ms`: the part that is deterministic.
    pub fn body(&self) -> Value {
        let mut v = self.to_json();
        v.as_object_mut().expect("object").remove("duration_ms");
        v
    }
}

struct Tally {
    range: String,
    cases: u64,
    failures: u64,
    counterexample: Option<Value>,
}

impl Tally {
    fn new() -> Self {
        Self {
            range: String::new(),
            cases: 0,
            failures: 0,
            counterexample: None,
        }
    }

    fn range(&mut self, r: impl Into<String>) {
        self.range = r.into();
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }
}

type CheckFn = fn(&SweepLimits, &mut Tally);

struct CheckDef {
    suite: Suite,
    name: &'static str,
    run: CheckFn,
}

const CHECKS: &[CheckDef] = &[
    CheckDef { suite: Suite::Ring, name: "ring.axioms", run: ring_axioms },
    CheckDef { suite: Suite::Ring, name: "ring.conjugation", run: ring_conjugation },
    CheckDef { suite: Suite::Ring, name: "ring.norm_multiplicative", run: ring_norm },
    CheckDef { suite: Suite::Ring, name: "ring.phi_powers", run: ring_phi_powers },
    CheckDef { suite: Suite::Ring, name: "ring.addition_formula", run: ring_addition_formula },
    CheckDef { suite: Suite::Ring, name: "ring.lucas_identities", run: ring_lucas },
    CheckDef { suite: Suite::Pascal, name: "pascal.golden_pascal", run: pascal_recursions },
    CheckDef { suite: Suite::Pascal, name: "pascal.fibonomial_symmetry", run: pascal_symmetry },
    CheckDef { suite: Suite::Pascal, name: "pascal.fibonomial_factorials", run: pascal_factorials },
    CheckDef { suite: Suite::Pascal, name: "pascal.divisor_k1", run: pascal_divisor_k1 },
    CheckDef { suite: Suite::Pascal, name: "pascal.divisor_powers", run: pascal_divisor_powers },
    CheckDef { suite: Suite::Pascal, name: "pascal.fast_doubling", run: pascal_fast_doubling },
    CheckDef { suite: Suite::Binomial, name: "binomial.expansion_vs_product", run: binomial_product },
    CheckDef { suite: Suite::Binomial, name: "binomial.zero_lists", run: binomial_zeros },
    CheckDef { suite: Suite::Binomial, name: "binomial.quadratic_factors", run: binomial_quadratic },
    CheckDef { suite: Suite::Binomial, name: "binomial.displayed_polynomials", run: binomial_displayed },
    CheckDef { suite: Suite::Derivative, name: "derivative.p_chain", run: derivative_chain },
    CheckDef { suite: Suite::Derivative, name: "derivative.translation", run: derivative_translate },
    CheckDef { suite: Suite::Derivative, name: "derivative.closed_vs_definition", run: derivative_definition },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.charpoly_theorem", run: carlitz_theorem },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.charpoly_bareiss", run: carlitz_bareiss },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.charpoly_cofactor", run: carlitz_cofactor },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.eigenvalues", run: carlitz_eigenvalues },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.trace_invariant", run: carlitz_trace },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.trace_fibonacci", run: carlitz_trace_fib },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.det_invariant", run: carlitz_det },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.power_sums", run: carlitz_power_sums },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.a2_closed_form", run: carlitz_a2 },
    CheckDef { suite: Suite::Carlitz, name: "carlitz.a3_closed_form", run: carlitz_a3 },
    CheckDef { suite: Suite::Analytic, name: "analytic.dbar_monomials", run: analytic_dbar },
    CheckDef { suite: Suite::Analytic, name: "analytic.cauchy_riemann_monomials", run: analytic_cr },
    CheckDef { suite: Suite::Analytic, name: "analytic.laplace_monomials", run: analytic_laplace },
    CheckDef { suite: Suite::Analytic, name: "analytic.recombination", run: analytic_recombine },
    CheckDef { suite: Suite::Analytic, name: "analytic.product_form", run: analytic_product },
    CheckDef { suite: Suite::Analytic, name: "analytic.random_polynomials", run: analytic_random },
];

/// Names of every check belonging to `suite`.
pub fn check_names(suite: Suite) -> Vec<&'static str> {
    CHECKS
        .iter()
        .filter(|c| c.suite == suite)
        .map(|c| c.name)
        .collect()
}

/// Runs every check of the given suites.
pub fn run_suites(suites: &[Suite], limits: &SweepLimits) -> VerificationReport {
    let start = Instant::now();
    let selected: Vec<&CheckDef> = CHECKS.iter().filter(|c| suites.contains(&c.suite)).collect();
    let mut outcomes: Vec<(&'static str, String, CheckResult)> = selected
        .par_iter()
        .map(|def| {
            let mut tally = Tally::new();
            (def.run)(limits, &mut tally);
            let result = CheckResult {
                name: def.name.to_string(),
                cases: tally.cases,
                failures: tally.failures,
                counterexample: tally.counterexample,
            };
            (def.name, tally.range, result)
        })
        .collect();
    outcomes.sort_by(|a, b| a.0.cmp(b.0));

    let ranges: BTreeMap<&str, String> = outcomes.iter().map(|(n, r, _)| (*n, r.clone())).collect();
    let suite_names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
    let suite = if suites.len() == Suite::ALL.len() {
        "all".to_string()
    } else {
        suite_names.join(",")
    };
    let params = json!({
        "suites": suite_names,
        "max_n": limits.max_n,
        "max_k": limits.max_k,
        "max_degree": limits.max_degree,
        "seed": limits.seed,
        "ranges": ranges,
    });
    VerificationReport {
        suite,
        params,
        checks: outcomes.into_iter().map(|(_, _, r)| r).collect(),
        duration_ms: start.elapsed().as_millis() as u64,
    }
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn poly_json(p: &Poly<BigRational>) -> Value {
    Value::Array(p.coeffs().iter().map(s).collect())
}

fn test_params() -> [BigRational; 4] {
    let r = |n, d| BigRational::new(BigInt::from(n), BigInt::from(d));
    [r(1, 1), r(-1, 1), r(2, 1), r(1, 2)]
}

fn random_golden(rng: &mut ChaCha8Rng) -> GoldenInt {
    let bound = 1_000_000_000i64;
    GoldenInt::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: u64) -> Poly<BigRational> {
    let deg = rng.gen_range(0..=max_degree) as usize;
    Poly::new(
        (0..=deg)
            .map(|_| BigRational::from_integer(rng.gen_range(-100i64..=100).into()))
            .collect(),
    )
}

const RANDOM_CASES: u64 = 200;
const RANDOM_POLYS: u64 = 100;

fn ring_axioms(l: &SweepLimits, t: &mut Tally) {
    t.range(format!("{RANDOM_CASES} random triples"));
    let mut rng = l.rng(1);
    for _ in 0..RANDOM_CASES {
        let (x, y, z) = (random_golden(&mut rng), random_golden(&mut rng), random_golden(&mut rng));
        let ok = &(&x * &y) * &z == &x * &(&y * &z)
            && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
            && &x * &y == &y * &x
            && &(&x + &y) + &z == &x + &(&y + &z)
            && &x * &GoldenInt::one() == x
            && (&x + &(-&x)).is_zero();
        t.record(ok, || json!({"x": s(&x), "y": s(&y), "z": s(&z)}));
    }
}

fn ring_conjugation(l: &SweepLimits, t: &mut Tally) {
    t.range(format!("{RANDOM_CASES} random pairs"));
    let mut rng = l.rng(2);
    for _ in 0..RANDOM_CASES {
        let (x, y) = (random_golden(&mut rng), random_golden(&mut rng));
        let ok = x.conj().conj() == x
            && (&x * &y).conj() == &x.conj() * &y.conj()
            && (&x + &y).conj() == &x.conj() + &y.conj();
        t.record(ok, || json!({"x": s(&x), "y": s(&y)}));
    }
}

fn ring_norm(l: &SweepLimits, t: &mut Tally) {
    t.range(format!("{RANDOM_CASES} random pairs"));
    let mut rng = l.rng(3);
    for _ in 0..RANDOM_CASES {
        let (x, y) = (random_golden(&mut rng), random_golden(&mut rng));
        let ok = (&x * &y).norm() == x.norm() * y.norm()
            && GoldenInt::from(x.norm()) == &x * &x.conj();
        t.record(ok, || json!({"x": s(&x), "y": s(&y)}));
    }
}

fn ring_phi_powers(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(200) as i64;
    t.range(format!("|n| <= {max}"));
    let phi = GoldenInt::phi();
    let phc = GoldenInt::phi_conj();
    let phi_inv = phi.inv().expect("unit");
    let phc_inv = phc.inv().expect("unit");
    let mut check = |n: i64, up: &GoldenInt, down: &GoldenInt| {
        let fib_form = GoldenInt::new(fib(n - 1), fib(n));
        let conj_form = &GoldenInt::phi_conj() * &GoldenInt::from(fib(n)) + GoldenInt::from(fib(n - 1));
        let got = GoldenInt::phi_pow(n);
        let ok = &got == up && got == fib_form && &got.conj() == down && down == &conj_form;
        t.record(ok, || json!({"n": n, "phi_pow": s(&got), "product": s(up), "conj_product": s(down)}));
    };
    let (mut up, mut down) = (GoldenInt::one(), GoldenInt::one());
    for n in 0..=max {
        check(n, &up, &down);
        up = &up * &phi;
        down = &down * &phc;
    }
    let (mut up, mut down) = (phi_inv.clone(), phc_inv.clone());
    for n in 1..=max {
        check(-n, &up, &down);
        up = &up * &phi_inv;
        down = &down * &phc_inv;
    }
}

fn ring_addition_formula(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(100) as i64;
    t.range(format!("0 <= n, m <= {max}"));
    for n in 0..=max {
        let up = GoldenInt::phi_pow(n);
        let fn_ = GoldenInt::from(fib(n));
        for m in 0..=max {
            let rhs = &up * &GoldenInt::from(fib(m)) + &GoldenInt::phi_conj_pow(m) * &fn_;
            let lhs = GoldenInt::from(fib(n + m));
            t.record(lhs == rhs, || json!({"n": n, "m": m, "lhs": s(&lhs), "rhs": s(&rhs)}));
        }
    }
}

fn ring_lucas(l: &SweepLimits, t: &mut Tally) {
    let max = l.k(50) as i64;
    t.range(format!("1 <= k <= {max}"));
    for k in 1..=max {
        let even = GoldenInt::phi_pow(2 * k) + GoldenInt::phi_pow(-2 * k);
        let even_rhs = GoldenInt::from(fib(2 * k) + 2 * fib(2 * k - 1));
        let odd = GoldenInt::phi_pow(2 * k + 1) - GoldenInt::phi_pow(-(2 * k + 1));
        let odd_rhs = GoldenInt::from(fib(2 * k + 1) + 2 * fib(2 * k));
        t.record(even == even_rhs && odd == odd_rhs, || {
            json!({"k": k, "even": s(&even), "even_rhs": s(&even_rhs), "odd": s(&odd), "odd_rhs": s(&odd_rhs)})
        });
    }
}

fn pascal_recursions(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(60);
    t.range(format!("2 <= n <= {max}, 1 <= k <= n-1"));
    for n in 2..=max {
        for k in 1..n {
            let c = golden_pascal(n, k).expect("in range");
            t.record(c.holds(), || {
                json!({"n": n, "k": k, "lhs": s(&c.lhs), "first": s(&c.first), "second": s(&c.second)})
            });
        }
    }
}

fn pascal_symmetry(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(60);
    t.range(format!("0 <= k <= n <= {max}"));
    for n in 0..=max {
        for k in 0..=n {
            let a = fibonomial(n, k).expect("k <= n");
            let b = fibonomial(n, n - k).expect("k <= n");
            t.record(a == b, || json!({"n": n, "k": k, "left": s(&a), "right": s(&b)}));
        }
    }
}

fn pascal_factorials(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(60);
    t.range(format!("0 <= k <= n <= {max}"));
    for n in 0..=max {
        for k in 0..=n {
            let a = fibonomial(n, k).expect("k <= n");
            let b = fibonomial_by_factorials(n, k).expect("k <= n");
            t.record(a == b, || json!({"n": n, "k": k, "product": s(&a), "factorials": s(&b)}));
        }
    }
}

fn pascal_divisor_k1(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(100) as i64;
    t.range(format!("|n| <= {max}"));
    for n in -max..=max {
        let d = fib_divisor(1, n).expect("k = 1");
        let f = fib(n);
        t.record(d == f, || json!({"n": n, "divisor": s(&d), "fib": s(&f)}));
    }
}

fn pascal_divisor_powers(l: &SweepLimits, t: &mut Tally) {
    let (max_k, max_n) = (l.k(12), l.n(40));
    t.range(format!("1 <= k <= {max_k}, 0 <= n <= {max_n}"));
    for k in 1..=max_k {
        let base = GoldenInt::phi_pow(k as i64);
        let conj_base = GoldenInt::phi_conj_pow(k as i64);
        let (mut up, mut down) = (GoldenInt::one(), GoldenInt::one());
        for n in 0..=max_n {
            let a = divisor_power_form(k, n as i64, false).expect("k >= 1");
            let b = divisor_power_form(k, n as i64, true).expect("k >= 1");
            t.record(a == up && b == down, || {
                json!({"k": k, "n": n, "phi_form": s(&a), "phi_power": s(&up), "conj_form": s(&b), "conj_power": s(&down)})
            });
            up = &up * &base;
            down = &down * &conj_base;
        }
    }
}

fn pascal_fast_doubling(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(1000);
    t.range(format!("0 <= n <= {max}"));
    for n in 0..=max {
        let a = fib(n as i64);
        let b = fib_iterative(n);
        t.record(a == b, || json!({"n": n, "fast": s(&a), "iterative": s(&b)}));
    }
}

fn binomial_product(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(40);
    t.range(format!("0 <= n <= {max}, a in {{1, -1, 2, 1/2}}"));
    for a in test_params() {
        for n in 0..=max {
            let expansion = golden_binomial(n, &a);
            let product = collapse_rational(&golden_binomial_product_form(n, &a));
            t.record(product.as_ref() == Some(&expansion), || {
                json!({"n": n, "a": s(&a), "expansion": poly_json(&expansion),
                       "product": product.as_ref().map(poly_json)})
            });
        }
    }
}

fn binomial_zeros(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(20);
    t.range(format!("1 <= n <= {max}"));
    for n in 1..=max {
        let p = golden_binomial(n, &BigRational::one()).map(|c| GoldenRational::from(c.clone()));
        for z in golden_binomial_zeros(n) {
            let value = p.eval(&z.clone().into());
            t.record(value.is_zero(), || json!({"n": n, "zero": s(&z), "value": s(&value)}));
        }
    }
}

fn binomial_quadratic(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(20);
    t.range(format!("0 <= m <= {max}, a in {{1, -1, 2, 1/2}}"));
    for a in test_params() {
        for m in 0..=max {
            let f = quadratic_factor_form(m, &a);
            let (got, want) = (f.expand(), golden_poly_p(m, &a));
            t.record(got == want, || {
                json!({"m": m, "a": s(&a), "factors": poly_json(&got), "p": poly_json(&want)})
            });
        }
    }
}

/// `(m, 1/scale, factors as ascending coefficients in x with a = 1)` as displayed
/// for the first golden polynomials.
const DISPLAYED: &[(u64, i64, &[&[i64]])] = &[
    (1, 1, &[&[-1, 1]]),
    (2, 1, &[&[-1, -1, 1]]),
    (3, 2, &[&[1, 1], &[1, -3, 1]]),
    (4, 6, &[&[-1, 1, 1], &[-1, -4, 1]]),
    (5, 30, &[&[-1, 1], &[1, 3, 1], &[1, -7, 1]]),
    (6, 240, &[&[-1, -1, 1], &[-1, 4, 1], &[-1, -11, 1]]),
    (7, 3120, &[&[1, 1], &[1, -3, 1], &[1, 7, 1], &[1, -18, 1]]),
];

/// The displayed factor lists, for any `a`: `xᵢ` coefficients pick up `a^{deg−i}`.
pub fn displayed_golden_polynomial(m: u64, a: &BigRational) -> Option<(BigRational, Vec<Poly<BigRational>>)> {
    let (_, den, factors) = DISPLAYED.iter().find(|(mm, _, _)| *mm == m)?;
    let factors = factors
        .iter()
        .map(|c| {
            let deg = c.len() - 1;
            Poly::new(
                c.iter()
                    .enumerate()
                    .map(|(i, &v)| BigRational::from_integer(v.into()) * num_traits::pow(a.clone(), deg - i))
                    .collect(),
            )
        })
        .collect();
    Some((BigRational::new(BigInt::one(), BigInt::from(*den)), factors))
}

fn binomial_displayed(_: &SweepLimits, t: &mut Tally) {
    t.range("m in 1..=7, a in {1, -1, 2, 1/2}");
    for a in test_params() {
        for &(m, _, _) in DISPLAYED {
            let (scale, factors) = displayed_golden_polynomial(m, &a).expect("listed");
            let f = quadratic_factor_form(m, &a);
            let displayed = Poly::product(&factors).scale(&scale);
            let ok = f.factors == factors && f.scale == scale && displayed == golden_poly_p(m, &a);
            t.record(ok, || {
                json!({"m": m, "a": s(&a), "computed": f.factors.iter().map(poly_json).collect::<Vec<_>>()})
            });
        }
    }
}

fn derivative_chain(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(30);
    t.range(format!("1 <= n <= {max}, a in {{1, -1, 2, 1/2}}"));
    for a in test_params() {
        for n in 1..=max {
            let d = golden_derivative(&golden_poly_p(n, &a));
            let want = golden_poly_p(n - 1, &a);
            t.record(d == want, || json!({"n": n, "a": s(&a), "derivative": poly_json(&d), "expected": poly_json(&want)}));
        }
    }
}

fn derivative_translate(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(30);
    t.range(format!("0 <= n <= {max}, a in {{1, -1, 2, 1/2}}"));
    for a in test_params() {
        for n in 0..=max {
            let xn = Poly::monomial(n as usize, BigRational::one());
            let got = golden_translate(&xn, &a);
            let want = golden_binomial(n, &a);
            t.record(got == want, || json!({"n": n, "a": s(&a), "translate": poly_json(&got), "binomial": poly_json(&want)}));
        }
    }
}

fn derivative_definition(l: &SweepLimits, t: &mut Tally) {
    let max = l.degree(20);
    t.range(format!("{RANDOM_POLYS} random integer polynomials, degree <= {max}"));
    let mut rng = l.rng(4);
    for _ in 0..RANDOM_POLYS {
        let p = random_poly(&mut rng, max);
        let closed = golden_derivative(&p);
        let def = golden_derivative_by_definition(&p);
        t.record(closed == def, || json!({"p": poly_json(&p), "closed": poly_json(&closed), "definition": poly_json(&def)}));
    }
}

fn int_list(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(s).collect())
}

fn carlitz_theorem(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(14) as usize;
    t.range(format!("1 <= order <= {max}"));
    for order in 1..=max {
        let ok = verify_charpoly_theorem(order).expect("order >= 1");
        t.record(ok, || {
            let q = char_poly(&build_carlitz(order).expect("order >= 1"));
            let g = golden_binomial(order as u64, &BigRational::one());
            json!({"order": order, "charpoly": int_list(&q.descending()),
                   "golden_binomial": Value::Array(g.descending().iter().map(s).collect())})
        });
    }
}

fn carlitz_bareiss(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(14) as usize;
    t.range(format!("1 <= order <= {max}"));
    for order in 1..=max {
        let a = build_carlitz(order).expect("order >= 1");
        let (fl, br) = (char_poly(&a), char_poly_bareiss(&a));
        t.record(fl == br, || {
            json!({"order": order, "faddeev_leverrier": int_list(&fl.descending()), "bareiss": int_list(&br.descending())})
        });
    }
}

/// Cofactor expansion is factorial-time; this is as deep as it goes.
const COFACTOR_MAX_ORDER: u64 = 7;

fn carlitz_cofactor(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(6).min(COFACTOR_MAX_ORDER) as usize;
    t.range(format!("1 <= order <= {max}"));
    for order in 1..=max {
        let a = build_carlitz(order).expect("order >= 1");
        let (fl, cf) = (char_poly(&a), char_poly_cofactor(&a));
        t.record(fl == cf, || {
            json!({"order": order, "faddeev_leverrier": int_list(&fl.descending()), "cofactor": int_list(&cf.descending())})
        });
    }
}

fn carlitz_eigenvalues(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(12) as usize;
    t.range(format!("1 <= order <= {max}"));
    for order in 1..=max {
        let q = char_poly(&build_carlitz(order).expect("order >= 1"));
        for e in eigen_powers(order).expect("order >= 1") {
            let value = q.eval_golden(&e);
            t.record(value.is_zero(), || json!({"order": order, "eigenvalue": s(&e), "value": s(&value)}));
        }
    }
}

fn carlitz_trace(l: &SweepLimits, t: &mut Tally) {
    let (max_n, max_k) = (l.n(10) as usize, l.k(8));
    t.range(format!("1 <= order <= {max_n}, 1 <= k <= {max_k}"));
    for order in 1..=max_n {
        for k in 1..=max_k {
            let (tr, d) = trace_invariant(order, k).expect("in range");
            t.record(tr == d, || json!({"order": order, "k": k, "trace": s(&tr), "divisor": s(&d)}));
        }
    }
}

fn carlitz_trace_fib(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(30) as usize;
    t.range(format!("1 <= order <= {max}"));
    for order in 1..=max {
        let tr = build_carlitz(order).expect("order >= 1").trace();
        let f = fib(order as i64);
        t.record(tr == f, || json!({"order": order, "trace": s(&tr), "fib": s(&f)}));
    }
}

fn carlitz_det(l: &SweepLimits, t: &mut Tally) {
    let (max_n, max_k) = (l.n(10) as usize, l.k(8));
    t.range(format!("1 <= order <= {max_n}, 0 <= k <= {max_k}"));
    for order in 1..=max_n {
        for k in 0..=max_k {
            let (d, e) = det_invariant(order, k).expect("in range");
            t.record(d == e, || json!({"order": order, "k": k, "det": s(&d), "expected": s(&e)}));
        }
    }
}

fn carlitz_power_sums(l: &SweepLimits, t: &mut Tally) {
    let (max_n, max_k) = (l.n(10) as usize, l.k(8));
    t.range(format!("1 <= order <= {max_n}, 1 <= k <= {max_k}"));
    for order in 1..=max_n {
        for k in 1..=max_k {
            let (sum, d) = power_sum_identity(order, k).expect("in range");
            t.record(sum == d, || json!({"order": order, "k": k, "power_sum": s(&sum), "divisor": s(&d)}));
        }
    }
}

fn matrix_json(m: &IntMatrix) -> Value {
    serde_json::to_value(m).expect("matrix serialises")
}

fn carlitz_a2(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(60);
    t.range(format!("1 <= n <= {max}"));
    let a2 = build_carlitz(2).expect("order 2");
    let mut power = a2.clone();
    for n in 1..=max {
        let closed = a2_power_closed_form(n);
        t.record(closed == power, || json!({"n": n, "closed_form": matrix_json(&closed), "power": matrix_json(&power)}));
        power = power.mul(&a2);
    }
}

fn carlitz_a3(l: &SweepLimits, t: &mut Tally) {
    let max = l.n(40);
    t.range(format!("0 <= n <= {max}"));
    let a3 = build_carlitz(3).expect("order 3");
    let five = BigInt::from(5);
    for n in 0..=max {
        let num = a3_power_numerators(n);
        let power = a3.pow(n);
        let scaled = IntMatrix::from_fn(3, |r, c| power.get(r, c) * &five).expect("3x3");
        let exact = num.rows().iter().flatten().all(|e| (e % &five).is_zero());
        t.record(exact && num == scaled, || {
            json!({"n": n, "five_times_closed_form": matrix_json(&num), "power": matrix_json(&power)})
        });
    }
}

fn analytic_dbar(l: &SweepLimits, t: &mut Tally) {
    let max = l.degree(20);
    t.range(format!("0 <= n <= {max}"));
    for n in 0..=max {
        t.record(check_dbar(n), || json!({"n": n}));
    }
}

fn monomial(m: u64) -> Poly<BigRational> {
    Poly::monomial(m as usize, BigRational::one())
}

fn analytic_cr(l: &SweepLimits, t: &mut Tally) {
    let max = l.degree(20);
    t.range(format!("f = x^m, 0 <= m <= {max}"));
    for m in 0..=max {
        t.record(check_cauchy_riemann(&monomial(m)), || json!({"m": m}));
    }
}

fn analytic_laplace(l: &SweepLimits, t: &mut Tally) {
    let max = l.degree(20);
    t.range(format!("f = x^m, 0 <= m <= {max}"));
    for m in 0..=max {
        t.record(check_laplace(&monomial(m)), || json!({"m": m}));
    }
}

fn analytic_recombine(l: &SweepLimits, t: &mut Tally) {
    let max = l.degree(20);
    t.range(format!("0 <= m <= {max}"));
    for m in 0..=max {
        t.record(recombined_monomial(m) == complex_golden_binomial(m), || json!({"m": m}));
    }
}

fn analytic_product(l: &SweepLimits, t: &mut Tally) {
    let max = l.degree(20);
    t.range(format!("0 <= n <= {max}"));
    for n in 0..=max {
        let ok = complex_golden_product_rational(n) == Some(complex_golden_binomial(n));
        t.record(ok, || json!({"n": n}));
    }
}

fn analytic_random(l: &SweepLimits, t: &mut Tally) {
    let max = l.degree(12);
    t.range(format!("{RANDOM_POLYS} random integer polynomials, degree <= {max}"));
    let mut rng = l.rng(5);
    for _ in 0..RANDOM_POLYS {
        let f = random_poly(&mut rng, max);
        let (cr, lap, dbar) = (check_cauchy_riemann(&f), check_laplace(&f), check_dbar_poly(&f));
        t.record(cr && lap && dbar, || {
            json!({"f": poly_json(&f), "cauchy_riemann": cr, "laplace": lap, "dbar": dbar})
        });
    }
}
