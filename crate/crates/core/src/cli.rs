//! The `mzv` command line: `expand`, `verify`, `eval` and `count`.
//!
//! Every command renders to a string so it can be driven from tests; the
//! binary only prints the [`Outcome`] and exits with its code.
//!
//! Exit codes: 0 on success (or a passing report), 1 when a verification
//! check fails, 2 on usage errors.

use std::collections::BTreeMap;
use std::num::NonZeroUsize;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{self, IdentityCheck, Tables};
use crate::error::Error;
use crate::numeric::{self, EvalConfig, EvalResult, TKind, ZetaKind, DEFAULT_TRUNCATION};
use crate::word_algebra::{
    expand_power_closed_form, power, Composition, ProductKind, TermRecord, WordPoly,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(
    name = "mzv",
    version,
    about = "Quasi-shuffle algebra and sum formulas for multiple zeta values"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the multinomial expansion of the k-th power of z_n.
    Expand(ExpandArgs),
    /// Check an identity symbolically, exactly or numerically.
    Verify(VerifyArgs),
    /// Evaluate a single nested sum.
    Eval(EvalArgs),
    /// Tabulate r! S(k, r), the Fubini total and the Delannoy split.
    Count(CountArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Harmonic,
    Star,
}

impl From<KindArg> for ProductKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Harmonic => ProductKind::Harmonic,
            KindArg::Star => ProductKind::Star,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Proposition,
    Main,
    Theorem3,
    Corollary,
    Hurwitz,
    Tvalues,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    Zeta,
    Zetastar,
    Hurwitz,
    Hurwitzstar,
    T,
    Tstar,
}

fn positive_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("expected a finite positive real, got {s}"))
    }
}

fn nonnegative_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("expected a finite nonnegative real, got {s}"))
    }
}

fn composition_arg(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: VerifyTarget,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// Split point for theorem3; every split 1..k is checked when omitted.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub ell: Option<u32>,
    /// Hurwitz shift; hurwitz sweeps x in {0.5, 1, 1.5} when omitted.
    #[arg(long, value_parser = positive_real)]
    pub x: Option<f64>,
    /// Product kind for proposition; both kinds when omitted.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION, value_parser = clap::value_parser!(u64).range(1..))]
    pub trunc: u64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = nonnegative_real)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Run independent checks on separate threads.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub kind: EvalKind,
    /// Comma-separated positive integers, e.g. `2,3`.
    #[arg(value_parser = composition_arg)]
    pub alpha: Composition,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION, value_parser = clap::value_parser!(u64).range(1..))]
    pub trunc: u64,
    #[arg(long, default_value_t = 1.0, value_parser = positive_real)]
    pub x: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long)]
    pub ell: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// What a command printed and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
            code: 2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: 2,
                }
            } else {
                Outcome::ok(rendered)
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Expand(a) => cmd_expand(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Eval(a) => cmd_eval(&a),
        Command::Count(a) => cmd_count(&a),
    }
}

/// Formats like C's `%.17g`: 17 significant digits, positional notation for
/// decimal exponents in `[-5, 17)`, trailing zeros removed.
pub fn format_sig17(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    let strip = |s: String| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };

    if (-4..17).contains(&exp) {
        let body = if exp >= 0 {
            let point = exp as usize + 1;
            format!("{}.{}", &digits[..point], &digits[point..])
        } else {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        };
        format!("{sign}{}", strip(body))
    } else {
        let body = strip(format!("{}.{}", &digits[..1], &digits[1..]));
        let esign = if exp < 0 { '-' } else { '+' };
        format!("{sign}{body}e{esign}{:02}", exp.abs())
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

// ---------------------------------------------------------------- expand

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandOutput {
    pub schema: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub terms: Vec<TermRecord>,
}

pub fn cmd_expand(args: &ExpandArgs) -> Outcome {
    let kind = ProductKind::from(args.kind);
    let poly = match expand_power_closed_form(args.n, args.k, kind) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    match args.format {
        Format::Text => Outcome::ok(format!("{poly}\n")),
        Format::Json => Outcome::ok(to_json(&ExpandOutput {
            schema: SCHEMA_VERSION,
            command: "expand".into(),
            inputs: inputs([
                ("n", args.n.to_string()),
                ("k", args.k.to_string()),
                ("kind", kind.name().into()),
            ]),
            terms: poly.to_records(),
        })),
    }
}

// ---------------------------------------------------------------- verify

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One comparison inside a report. Numeric fields are decimal strings:
/// big integers verbatim, floats with 17 significant digits. Exact checks
/// use tolerance `"0"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
    pub tolerance: String,
    #[serde(skip)]
    passed: bool,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.passed
    }

    fn exact_integer(name: String, check: &IdentityCheck) -> Self {
        Self {
            name,
            lhs: check.lhs.to_string(),
            rhs: check.rhs.to_string(),
            difference: (&check.lhs - &check.rhs).to_string(),
            tolerance: "0".into(),
            passed: check.equal,
        }
    }

    fn exact_poly(name: String, lhs: &WordPoly, rhs: &WordPoly) -> Self {
        let diff = lhs - rhs;
        Self {
            name,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            difference: diff.to_string(),
            tolerance: "0".into(),
            passed: diff.is_zero(),
        }
    }

    fn numeric(name: String, lhs: f64, rhs: f64, tol: f64) -> Self {
        let difference = (lhs - rhs).abs();
        Self {
            name,
            lhs: format_sig17(lhs),
            rhs: format_sig17(rhs),
            difference: format_sig17(difference),
            tolerance: format_sig17(tol),
            passed: difference <= tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub status: Status,
    pub details: Vec<CheckRecord>,
}

impl Report {
    fn new(command: String, inputs: BTreeMap<String, String>, details: Vec<CheckRecord>) -> Self {
        let status = if details.iter().all(CheckRecord::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            schema: SCHEMA_VERSION,
            command,
            inputs,
            status,
            details,
        }
    }

    /// Status recomputed from the rendered records, for reports read back
    /// from JSON.
    pub fn recomputed_status(&self) -> Status {
        let ok = self.details.iter().all(|d| {
            let (Ok(diff), Ok(tol)) = (d.difference.parse::<f64>(), d.tolerance.parse::<f64>())
            else {
                return false;
            };
            diff.abs() <= tol
        });
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{}: {}\n",
            self.command,
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            }
        ));
        for d in &self.details {
            out.push_str(&format!(
                "  [{}] {}\n      lhs = {}\n      rhs = {}\n      difference = {} (tolerance {})\n",
                if d.passed { "pass" } else { "FAIL" },
                d.name,
                d.lhs,
                d.rhs,
                d.difference,
                d.tolerance
            ));
        }
        if self.status == Status::Fail {
            if let Some(worst) = self.worst_failure() {
                out.push_str(&format!("worst check: {}\n", worst.name));
            }
        }
        out
    }

    fn worst_failure(&self) -> Option<&CheckRecord> {
        self.details.iter().filter(|d| !d.passed).max_by(|a, b| {
            let key = |d: &CheckRecord| {
                d.difference
                    .trim_start_matches('-')
                    .parse::<f64>()
                    .unwrap_or(f64::INFINITY)
            };
            key(a).total_cmp(&key(b))
        })
    }
}

type Check<'a> = Box<dyn Fn() -> Result<CheckRecord, Error> + Send + Sync + 'a>;

/// Runs checks in order, or on one thread each when `parallel` is set. The
/// output order is the submission order in both cases.
fn run_checks(checks: Vec<Check<'_>>, parallel: bool) -> Result<Vec<CheckRecord>, Error> {
    if !parallel || checks.len() < 2 {
        return checks.iter().map(|c| c()).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = checks.iter().map(|c| scope.spawn(c)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check worker panicked"))
            .collect()
    })
}

fn closed_form(n: u32, k: u32, kind: ProductKind) -> Result<WordPoly, Error> {
    expand_power_closed_form(n, k, kind)
}

fn sum_formula_checks<'a>(
    label: &'a str,
    n: u32,
    k: u32,
    cfg: EvalConfig,
    tol: f64,
    parallel: bool,
) -> Vec<Check<'a>> {
    let threads = if parallel {
        std::thread::available_parallelism().unwrap_or(NonZeroUsize::MIN)
    } else {
        NonZeroUsize::MIN
    };
    let (plain, star) = if label == "hurwitz" {
        (ZetaKind::HurwitzMzv, ZetaKind::HurwitzMzsv)
    } else {
        (ZetaKind::Mzv, ZetaKind::Mzsv)
    };
    let mut checks: Vec<Check<'a>> = Vec::new();
    for (kind, zeta) in [(ProductKind::Harmonic, plain), (ProductKind::Star, star)] {
        checks.push(Box::new(move || {
            let poly = closed_form(n, k, kind)?;
            let lhs = numeric::evaluate_poly_parallel(&poly, zeta, &cfg, threads)?;
            let single = numeric::evaluate(&Composition::new(vec![n])?, zeta, &cfg)?;
            let rhs = numeric::power_of(&single, k);
            let name = if label == "hurwitz" {
                format!(
                    "{label} {} n={n} k={k} x={}",
                    kind.name(),
                    format_sig17(cfg.shift)
                )
            } else {
                format!("{label} {} n={n} k={k}", kind.name())
            };
            Ok(CheckRecord::numeric(name, lhs.value, rhs.value, tol))
        }));
    }
    checks
}

fn plain_equivalence_checks<'a>(n: u32, k: u32, trunc: u64) -> Vec<Check<'a>> {
    let mut checks: Vec<Check<'a>> = Vec::new();
    for (kind, plain, hurwitz) in [
        (ProductKind::Harmonic, ZetaKind::Mzv, ZetaKind::HurwitzMzv),
        (ProductKind::Star, ZetaKind::Mzsv, ZetaKind::HurwitzMzsv),
    ] {
        checks.push(Box::new(move || {
            let cfg = EvalConfig::new(trunc).with_shift(1.0);
            let poly = closed_form(n, k, kind)?;
            let h = numeric::evaluate_poly(&poly, hurwitz, &cfg)?;
            let p = numeric::evaluate_poly(&poly, plain, &cfg)?;
            Ok(CheckRecord::numeric(
                format!("hurwitz x=1 equals plain {} n={n} k={k}", kind.name()),
                h.value,
                p.value,
                0.0,
            ))
        }));
    }
    checks
}

fn tvalue_checks<'a>(n: u32, k: u32, cfg: EvalConfig, tol: f64) -> Vec<Check<'a>> {
    let mut checks: Vec<Check<'a>> = Vec::new();
    for (kind, tkind) in [
        (ProductKind::Harmonic, TKind::Plain),
        (ProductKind::Star, TKind::Star),
    ] {
        checks.push(Box::new(move || {
            let poly = closed_form(n, k, kind)?;
            let mut lhs = numeric::CompensatedSum::new();
            for (w, c) in poly.iter() {
                let c = num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN);
                lhs.add(c * numeric::t_value(w.as_composition(), tkind, &cfg)?.value);
            }
            let single = numeric::t_value(&Composition::new(vec![n])?, TKind::Plain, &cfg)?;
            let rhs = numeric::power_of(&single, k);
            Ok(CheckRecord::numeric(
                format!("tvalues {} n={n} k={k}", kind.name()),
                lhs.value(),
                rhs.value,
                tol,
            ))
        }));
    }
    checks.push(Box::new(move || {
        let alpha = Composition::new(vec![n])?;
        let t = numeric::t_value(&alpha, TKind::Plain, &cfg)?;
        let h = numeric::hurwitz_mzv(&alpha, &cfg.with_shift(0.5))?;
        Ok(CheckRecord::numeric(
            format!("2^{n} t({n}) = zeta({n}; 1/2)"),
            2f64.powi(n as i32) * t.value,
            h.value,
            0.0,
        ))
    }));
    checks.push(Box::new(move || {
        let alpha = Composition::new(vec![n])?;
        let t = numeric::t_value(&alpha, TKind::Plain, &cfg)?;
        let direct = numeric::t_value_direct(&alpha, TKind::Plain, &cfg)?;
        Ok(CheckRecord::numeric(
            format!("t({n}) odd-denominator direct sum"),
            t.value,
            direct.value,
            tol,
        ))
    }));
    checks
}

fn verify_report(args: &VerifyArgs) -> Result<Report, Outcome> {
    let (n, k, tol) = (args.n, args.k, args.tol);
    let cfg = EvalConfig::new(args.trunc);
    let numeric_target = matches!(
        args.target,
        VerifyTarget::Main | VerifyTarget::Hurwitz | VerifyTarget::Tvalues
    );
    if numeric_target && n < 2 {
        return Err(Outcome::usage(format!(
            "--n {n}: numeric checks need n >= 2 (the last part must be >= 2 for convergence)"
        )));
    }

    let mut echo = inputs([("n", n.to_string()), ("k", k.to_string())]);
    let command = format!(
        "verify {}",
        args.target
            .to_possible_value()
            .map(|v| v.get_name().to_owned())
            .unwrap_or_default()
    );

    let checks: Vec<Check<'_>> = match args.target {
        VerifyTarget::Proposition => {
            let kinds: Vec<ProductKind> = match args.kind {
                Some(kind) => vec![kind.into()],
                None => ProductKind::ALL.to_vec(),
            };
            echo.insert(
                "kind".into(),
                kinds.iter().map(|k| k.name()).collect::<Vec<_>>().join(","),
            );
            kinds
                .into_iter()
                .map(|kind| -> Check<'_> {
                    Box::new(move || {
                        let closed = closed_form(n, k, kind)?;
                        let iterated = power(n, k, kind)?;
                        Ok(CheckRecord::exact_poly(
                            format!("proposition {} n={n} k={k}", kind.name()),
                            &closed,
                            &iterated,
                        ))
                    })
                })
                .collect()
        }
        VerifyTarget::Main => {
            echo.insert("trunc".into(), args.trunc.to_string());
            echo.insert("tol".into(), format_sig17(tol));
            sum_formula_checks("main", n, k, cfg, tol, args.parallel)
        }
        VerifyTarget::Hurwitz => {
            echo.insert("trunc".into(), args.trunc.to_string());
            echo.insert("tol".into(), format_sig17(tol));
            let shifts: Vec<f64> = match args.x {
                Some(x) => vec![x],
                None => vec![0.5, 1.0, 1.5],
            };
            echo.insert(
                "x".into(),
                shifts
                    .iter()
                    .map(|x| format_sig17(*x))
                    .collect::<Vec<_>>()
                    .join(","),
            );
            let mut checks = Vec::new();
            for &x in &shifts {
                checks.extend(sum_formula_checks(
                    "hurwitz",
                    n,
                    k,
                    cfg.with_shift(x),
                    tol,
                    args.parallel,
                ));
                if x == 1.0 {
                    checks.extend(plain_equivalence_checks(n, k, args.trunc));
                }
            }
            checks
        }
        VerifyTarget::Tvalues => {
            echo.insert("trunc".into(), args.trunc.to_string());
            echo.insert("tol".into(), format_sig17(tol));
            tvalue_checks(n, k, cfg, tol)
        }
        VerifyTarget::Theorem3 => {
            echo.remove("n");
            let splits: Vec<u32> = match args.ell {
                Some(ell) if ell >= k => {
                    return Err(Outcome::usage(format!(
                        "--ell {ell}: must satisfy 1 <= ell < k = {k}"
                    )))
                }
                Some(ell) => vec![ell],
                None if k < 2 => {
                    return Err(Outcome::usage(format!("--k {k}: theorem3 needs k >= 2")))
                }
                None => (1..k).collect(),
            };
            echo.insert(
                "ell".into(),
                splits
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            );
            let tables = std::sync::Arc::new(Tables::new(k));
            splits
                .into_iter()
                .map(|ell| -> Check<'_> {
                    let tables = tables.clone();
                    Box::new(move || {
                        let check = combinatorics::verify_theorem3_with(&tables, k, ell)?;
                        Ok(CheckRecord::exact_integer(
                            format!("theorem3 k={k} ell={ell}"),
                            &check,
                        ))
                    })
                })
                .collect()
        }
        VerifyTarget::Corollary => {
            echo.remove("n");
            vec![Box::new(move || {
                let check = combinatorics::verify_corollary(k)?;
                Ok(CheckRecord::exact_integer(
                    format!("corollary k={k}"),
                    &check,
                ))
            })]
        }
    };

    let details = run_checks(checks, args.parallel).map_err(|e| Outcome::usage(e.to_string()))?;
    Ok(Report::new(command, echo, details))
}

pub fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let report = match verify_report(args) {
        Ok(r) => r,
        Err(outcome) => return outcome,
    };
    let stdout = match args.format {
        Format::Text => report.render_text(),
        Format::Json => to_json(&report),
    };
    let stderr = match (report.status, report.worst_failure()) {
        (Status::Fail, Some(w)) => format!(
            "verification failed: {} (difference {}, tolerance {})\n",
            w.name, w.difference, w.tolerance
        ),
        _ => String::new(),
    };
    Outcome {
        stdout,
        stderr,
        code: if report.status == Status::Pass { 0 } else { 1 },
    }
}

// ---------------------------------------------------------------- eval

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOutput {
    pub schema: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub value: String,
    pub tail_bound: String,
}

pub fn cmd_eval(args: &EvalArgs) -> Outcome {
    let cfg = EvalConfig::new(args.trunc).with_shift(args.x);
    let alpha = &args.alpha;
    let result: Result<EvalResult, Error> = match args.kind {
        EvalKind::Zeta => numeric::mzv(alpha, &cfg),
        EvalKind::Zetastar => numeric::mzsv(alpha, &cfg),
        EvalKind::Hurwitz => numeric::hurwitz_mzv(alpha, &cfg),
        EvalKind::Hurwitzstar => numeric::hurwitz_mzsv(alpha, &cfg),
        EvalKind::T => numeric::t_value(alpha, TKind::Plain, &cfg),
        EvalKind::Tstar => numeric::t_value(alpha, TKind::Star, &cfg),
    };
    let r = match result {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let kind_name = args
        .kind
        .to_possible_value()
        .map(|v| v.get_name().to_owned())
        .unwrap_or_default();
    let alpha_text = alpha
        .parts()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",");
    match args.format {
        Format::Text => Outcome::ok(format!(
            "{kind_name}({alpha_text})\nvalue      = {}\ntail_bound = {}\n",
            format_sig17(r.value),
            format_sig17(r.tail_bound)
        )),
        Format::Json => {
            let mut echo = inputs([
                ("kind", kind_name),
                ("alpha", alpha_text),
                ("trunc", args.trunc.to_string()),
            ]);
            if matches!(args.kind, EvalKind::Hurwitz | EvalKind::Hurwitzstar) {
                echo.insert("x".into(), format_sig17(args.x));
            }
            Outcome::ok(to_json(&EvalOutput {
                schema: SCHEMA_VERSION,
                command: "eval".into(),
                inputs: echo,
                value: format_sig17(r.value),
                tail_bound: format_sig17(r.tail_bound),
            }))
        }
    }
}

// ---------------------------------------------------------------- count

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub r: u32,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitRow {
    pub p: u32,
    pub q: u32,
    pub left: String,
    pub right: String,
    pub delannoy: String,
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSummary {
    pub ell: u32,
    pub terms: Vec<SplitRow>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountOutput {
    pub schema: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub rows: Vec<CountRow>,
    pub total: String,
    pub split: Option<SplitSummary>,
}

pub fn cmd_count(args: &CountArgs) -> Outcome {
    let k = args.k;
    let tables = Tables::new(k);
    let rows: Vec<CountRow> = (1..=k)
        .map(|r| CountRow {
            r,
            count: (tables.factorial(r) * tables.stirling2(k, r)).to_string(),
        })
        .collect();
    let total = tables.fubini(k);

    let split = match args.ell {
        None => None,
        Some(ell) => {
            let terms = match combinatorics::split_terms_with(&tables, k, ell) {
                Ok(t) => t,
                Err(e) => return Outcome::usage(format!("--ell {ell}: {e}")),
            };
            let rhs: num_bigint::BigInt = terms.iter().map(|t| &t.product).sum();
            Some(SplitSummary {
                ell,
                lhs: total.to_string(),
                rhs: rhs.to_string(),
                equal: rhs == total,
                terms: terms
                    .into_iter()
                    .map(|t| SplitRow {
                        p: t.p,
                        q: t.q,
                        left: t.left.to_string(),
                        right: t.right.to_string(),
                        delannoy: t.delannoy.to_string(),
                        product: t.product.to_string(),
                    })
                    .collect(),
            })
        }
    };

    match args.format {
        Format::Json => {
            let mut echo = inputs([("k", k.to_string())]);
            if let Some(ell) = args.ell {
                echo.insert("ell".into(), ell.to_string());
            }
            Outcome::ok(to_json(&CountOutput {
                schema: SCHEMA_VERSION,
                command: "count".into(),
                inputs: echo,
                rows,
                total: total.to_string(),
                split,
            }))
        }
        Format::Text => {
            let mut out = format!("k = {k}\n{:>4}  r!*S(k,r)\n", "r");
            for row in &rows {
                out.push_str(&format!("{:>4}  {}\n", row.r, row.count));
            }
            out.push_str(&format!("total (Fubini) = {total}\n"));
            if let Some(s) = &split {
                out.push_str(&format!(
                    "split ell = {}: sum_p sum_q p!S(ell,p) * q!S(k-ell,q) * D(p,q)\n",
                    s.ell
                ));
                out.push_str(&format!(
                    "{:>4} {:>4}  {:>12} {:>12} {:>12}  product\n",
                    "p", "q", "p!S(ell,p)", "q!S(k-ell,q)", "D(p,q)"
                ));
                for t in &s.terms {
                    out.push_str(&format!(
                        "{:>4} {:>4}  {:>12} {:>12} {:>12}  {}\n",
                        t.p, t.q, t.left, t.right, t.delannoy, t.product
                    ));
                }
                out.push_str(&format!("lhs = {}\nrhs = {}\n", s.lhs, s.rhs));
            }
            Outcome::ok(out)
        }
    }
}
