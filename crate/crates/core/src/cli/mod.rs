//! Command-line front end: argument parsing, dispatch and output records.
//!
//! Exit codes: `0` success (mathematical zeros included), `1` a verification
//! suite failed, `2` usage, parse or domain error.

mod record;

pub use record::{BackendResult, Exact, OutputRecord, RationalRepr, Status};

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::angular::{cg_to_3jm, selection_rules_satisfied, CgLabels, DegenerateLabels};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, SignedSqrtRational};
use crate::prob::{
    binomial_limit_tv, binomial_pmf, binomial_pmf_table, hypergeom_mgf, BinomialParams, HypergeomParams,
};
use crate::verify::{
    run_backend_agreement_with, run_degenerate_identity_with, run_distribution_identities_with, Kernels, SuiteReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "clebsch-binom", version, about = "Exact Clebsch-Gordan coefficients and hypergeometric/binomial distributions")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Clebsch-Gordan coefficient C^{c gamma}_{a alpha, b beta}
    Cg(CoeffArgs),
    /// 3jm symbol (a b c; alpha beta -gamma), from the same six labels as `cg`
    #[command(name = "3jm")]
    ThreeJm(CoeffArgs),
    /// Hypergeometric and binomial distribution quantities
    Dist {
        #[command(subcommand)]
        which: DistCommand,
    },
    /// Total variation distance between hypergeometric (p n3, n2, n3) and binomial (n2, p)
    Limit(LimitArgs),
    /// Run identity verification suites; prints a JSON report
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct CoeffArgs {
    #[arg(allow_hyphen_values = true)]
    pub a: String,
    #[arg(allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(allow_hyphen_values = true)]
    pub b: String,
    #[arg(allow_hyphen_values = true)]
    pub beta: String,
    #[arg(allow_hyphen_values = true)]
    pub c: String,
    #[arg(allow_hyphen_values = true)]
    pub gamma: String,
    #[arg(long, value_enum, default_value_t = BackendChoice::Racah)]
    pub backend: BackendChoice,
    /// Significant digits of the decimal rendering.
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
    pub digits: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendChoice {
    Racah,
    #[value(name = "3f2")]
    Hypergeometric,
    Ladder,
    All,
}

impl BackendChoice {
    fn name(self) -> &'static str {
        match self {
            BackendChoice::Racah => "racah",
            BackendChoice::Hypergeometric => "3f2",
            BackendChoice::Ladder => "ladder",
            BackendChoice::All => "all",
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct PopulationArgs {
    #[arg(long)]
    pub n1: u64,
    #[arg(long)]
    pub n2: u64,
    #[arg(long)]
    pub n3: u64,
}

impl PopulationArgs {
    fn echo(&self) -> String {
        format!("--n1 {} --n2 {} --n3 {}", self.n1, self.n2, self.n3)
    }

    fn params(&self) -> Result<HypergeomParams> {
        HypergeomParams::new(self.n1, self.n2, self.n3)
    }
}

#[derive(Subcommand, Debug)]
pub enum DistCommand {
    /// Hypergeometric pmf P(X = x)
    HypergeomPmf {
        #[command(flatten)]
        pop: PopulationArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
    /// Binomial pmf B(trials, r, p)
    BinomialPmf {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
    /// Hypergeometric probability generating function G(t)
    Pgf {
        #[command(flatten)]
        pop: PopulationArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
    /// Hypergeometric moment generating function M(t), numeric
    Mgf {
        #[command(flatten)]
        pop: PopulationArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
    /// Hypergeometric mean n1 n2 / n3
    Mean {
        #[command(flatten)]
        pop: PopulationArgs,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
    /// Hypergeometric variance
    Variance {
        #[command(flatten)]
        pop: PopulationArgs,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
    /// Convolution of B(trials-a, p) and B(trials-b, p)
    Convolve {
        #[arg(long)]
        trials_a: u64,
        #[arg(long)]
        trials_b: u64,
        #[arg(long)]
        p: String,
    },
    /// P(m1, m2 | m) for binomial spins; equals the squared stretched coefficient
    Conditional {
        #[arg(long)]
        l1: u64,
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        l2: u64,
        #[arg(long)]
        k2: u64,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub n2: u64,
    /// Comma-separated population sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n3: Vec<u64>,
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(1..))]
    pub digits: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Agreement,
    Degenerate,
    Distributions,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
    pub max_twice_ab: i64,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_l: u64,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(2..))]
    pub max_n3: u64,
    /// Also write the report to this file.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    suites: Vec<SuiteReport>,
}

enum Emitted {
    One(OutputRecord),
    Many(Vec<OutputRecord>),
}

impl Emitted {
    fn records(&self) -> Vec<&OutputRecord> {
        match self {
            Emitted::One(r) => vec![r],
            Emitted::Many(rs) => rs.iter().collect(),
        }
    }
}

/// Runs the command line with the default kernels.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(&Kernels::default(), args, out, err)
}

/// Runs the command line; `args` includes the program name.
pub fn run_with<I, T>(kernels: &Kernels, args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let format = cli.format;
    let emitted = match cli.command {
        Command::Cg(args) => Emitted::One(coefficient(kernels, &args, false)),
        Command::ThreeJm(args) => Emitted::One(coefficient(kernels, &args, true)),
        Command::Dist { which } => Emitted::One(distribution(&which)),
        Command::Limit(args) => limit(&args),
        Command::Verify(args) => return verify(kernels, &args, out, err),
    };
    let records = emitted.records();
    let text = match (format, &emitted) {
        (Format::Json, Emitted::One(r)) => serde_json::to_string(r).expect("records serialize"),
        (Format::Json, Emitted::Many(rs)) => serde_json::to_string(rs).expect("records serialize"),
        (Format::Text, _) => records.iter().map(|r| r.to_text()).collect::<String>().trim_end().to_string(),
    };
    let _ = writeln!(out, "{text}");
    let errors: Vec<_> = records.iter().filter(|r| r.is_error()).collect();
    for r in &errors {
        let _ = writeln!(err, "error: {}", r.detail);
    }
    if errors.is_empty() {
        EXIT_OK
    } else {
        EXIT_USAGE
    }
}

fn coefficient_echo(args: &CoeffArgs, labels: Option<&CgLabels>, three_jm: bool) -> String {
    let name = if three_jm { "3jm" } else { "cg" };
    let labels = match labels {
        Some(l) => [l.a, l.alpha, l.b, l.beta, l.c, l.gamma].map(|h| h.to_string()).join(" "),
        None => [&args.a, &args.alpha, &args.b, &args.beta, &args.c, &args.gamma].map(|s| s.as_str()).join(" "),
    };
    format!("{name} {labels} --backend {} --digits {}", args.backend.name(), args.digits)
}

fn zero_reason(labels: &CgLabels) -> &'static str {
    let [ta, talpha, tb, tbeta, tc, tgamma] = labels.twice();
    if tgamma != talpha + tbeta {
        "selection rule: gamma != alpha+beta"
    } else if (ta - tb).abs() > tc || tc > ta + tb {
        "selection rule: triangle |a-b| <= c <= a+b violated"
    } else if (ta + tb + tc) % 2 != 0 {
        "selection rule: a+b+c is not an integer"
    } else {
        "coefficient vanishes"
    }
}

fn evaluate(kernels: &Kernels, backend: BackendChoice, labels: &CgLabels) -> Result<Option<SignedSqrtRational>> {
    match backend {
        BackendChoice::Racah => Ok(Some((kernels.cg_racah)(labels))),
        BackendChoice::Hypergeometric => (kernels.cg_3f2)(labels).map(Some),
        BackendChoice::Ladder => {
            if labels.c != labels.a + labels.b {
                return Ok(None);
            }
            if !selection_rules_satisfied(labels) {
                return Ok(Some(SignedSqrtRational::zero()));
            }
            let steps = (labels.c - labels.gamma).to_int().expect("integral for valid labels") as u64;
            let state = (kernels.cg_ladder_stretched)(labels.a, labels.b, steps)?;
            Ok(Some(state.amplitude(labels.alpha, labels.beta)))
        }
        BackendChoice::All => unreachable!("expanded by the caller"),
    }
}

const LADDER_INAPPLICABLE: &str = "ladder backend applies only when c = a + b";

fn coefficient(kernels: &Kernels, args: &CoeffArgs, three_jm: bool) -> OutputRecord {
    let labels = match CgLabels::parse([&args.a, &args.alpha, &args.b, &args.beta, &args.c, &args.gamma].map(|s| s.as_str())) {
        Ok(l) => l,
        Err(e) => return OutputRecord::error(&coefficient_echo(args, None, three_jm), e.to_string()),
    };
    let echo = coefficient_echo(args, Some(&labels), three_jm);
    let convert = |v: SignedSqrtRational| -> Result<SignedSqrtRational> {
        if three_jm {
            cg_to_3jm(&labels, &v)
        } else {
            Ok(v)
        }
    };
    let detail = |v: &SignedSqrtRational| -> String {
        if v.is_zero() {
            zero_reason(&labels).to_string()
        } else {
            String::new()
        }
    };
    if args.backend != BackendChoice::All {
        return match evaluate(kernels, args.backend, &labels).and_then(|v| v.map(convert).transpose()) {
            Ok(Some(v)) => OutputRecord::root(&echo, &v, args.digits, detail(&v)),
            Ok(None) => OutputRecord::error(&echo, LADDER_INAPPLICABLE),
            Err(e) => OutputRecord::error(&echo, e.to_string()),
        };
    }
    let mut results = Vec::new();
    let mut values = Vec::new();
    for backend in [BackendChoice::Racah, BackendChoice::Hypergeometric, BackendChoice::Ladder] {
        let result = match evaluate(kernels, backend, &labels).and_then(|v| v.map(convert).transpose()) {
            Ok(Some(v)) => {
                let r = OutputRecord::root(&echo, &v, args.digits, "");
                values.push(v);
                BackendResult { backend: backend.name(), status: r.status, exact: r.exact, decimal: r.decimal, detail: None }
            }
            Ok(None) => BackendResult {
                backend: backend.name(),
                status: Status::Error,
                exact: None,
                decimal: None,
                detail: Some(LADDER_INAPPLICABLE.to_string()),
            },
            Err(e) => BackendResult {
                backend: backend.name(),
                status: Status::Error,
                exact: None,
                decimal: None,
                detail: Some(e.to_string()),
            },
        };
        results.push(result);
    }
    let agreement = values.windows(2).all(|w| w[0] == w[1])
        && results.iter().all(|r| r.status != Status::Error || r.detail.as_deref() == Some(LADDER_INAPPLICABLE));
    let mut record = match values.first() {
        Some(v) => OutputRecord::root(&echo, v, args.digits, detail(v)),
        None => OutputRecord::error(&echo, "no backend produced a value"),
    };
    record.backends = Some(results);
    record.agreement = Some(agreement);
    record
}

fn distribution(which: &DistCommand) -> OutputRecord {
    match run_distribution(which) {
        Ok(r) => r,
        Err((echo, e)) => OutputRecord::error(&echo, e.to_string()),
    }
}

fn run_distribution(which: &DistCommand) -> std::result::Result<OutputRecord, (String, Error)> {
    fn tag<T>(echo: &str, r: Result<T>) -> std::result::Result<T, (String, Error)> {
        r.map_err(|e| (echo.to_string(), e))
    }
    match which {
        DistCommand::HypergeomPmf { pop, x, digits } => {
            let echo = format!("dist hypergeom-pmf {} --x {x} --digits {digits}", pop.echo());
            let params = tag(&echo, pop.params())?;
            let v = crate::prob::hypergeom_pmf(&params, *x);
            Ok(OutputRecord::rational(&echo, &v, *digits, ""))
        }
        DistCommand::BinomialPmf { trials, p, r, digits } => {
            let echo = format!("dist binomial-pmf --trials {trials} --p {p} --r {r} --digits {digits}");
            let p = tag(&echo, parse_rational(p))?;
            let params = tag(&echo, BinomialParams::new(*trials, p))?;
            Ok(OutputRecord::rational(&echo, &binomial_pmf(&params, *r), *digits, ""))
        }
        DistCommand::Pgf { pop, t, digits } => {
            let echo = format!("dist pgf {} --t {t} --digits {digits}", pop.echo());
            let t = tag(&echo, parse_rational(t))?;
            let params = tag(&echo, pop.params())?;
            let v = tag(&echo, crate::prob::hypergeom_pgf(&params, &t))?;
            Ok(OutputRecord::rational(&echo, &v, *digits, ""))
        }
        DistCommand::Mgf { pop, t, digits } => {
            let echo = format!("dist mgf {} --t {t} --digits {digits}", pop.echo());
            let t = tag(&echo, parse_rational(t))?;
            let params = tag(&echo, pop.params())?;
            let v = tag(&echo, hypergeom_mgf(&params, &t, *digits))?;
            Ok(OutputRecord::approximate(&echo, &v, *digits, format!("numeric: exp evaluated to {digits} significant digits")))
        }
        DistCommand::Mean { pop, digits } => {
            let echo = format!("dist mean {} --digits {digits}", pop.echo());
            let params = tag(&echo, pop.params())?;
            let v = tag(&echo, crate::prob::hypergeom_mean(&params))?;
            Ok(OutputRecord::rational(&echo, &v, *digits, ""))
        }
        DistCommand::Variance { pop, digits } => {
            let echo = format!("dist variance {} --digits {digits}", pop.echo());
            let params = tag(&echo, pop.params())?;
            let v = tag(&echo, crate::prob::hypergeom_variance(&params))?;
            Ok(OutputRecord::rational(&echo, &v, *digits, ""))
        }
        DistCommand::Convolve { trials_a, trials_b, p } => {
            let echo = format!("dist convolve --trials-a {trials_a} --trials-b {trials_b} --p {p}");
            let p = tag(&echo, parse_rational(p))?;
            let a = tag(&echo, BinomialParams::new(*trials_a, p.clone()))?;
            let b = tag(&echo, BinomialParams::new(*trials_b, p.clone()))?;
            let table = tag(&echo, crate::prob::binomial_convolve(&a, &b))?;
            let whole = tag(&echo, BinomialParams::new(trials_a + trials_b, p))?;
            let agreement = table == binomial_pmf_table(&whole);
            let detail = format!("compared against B({}, {})", trials_a + trials_b, whole.p());
            Ok(OutputRecord::table(&echo, table, agreement, detail))
        }
        DistCommand::Conditional { l1, k1, l2, k2, p, digits } => {
            let echo = format!("dist conditional --l1 {l1} --k1 {k1} --l2 {l2} --k2 {k2} --p {p} --digits {digits}");
            let p = tag(&echo, parse_rational(p))?;
            let labels = tag(&echo, DegenerateLabels::new(*l1, *k1, *l2, *k2))?;
            let v = tag(&echo, crate::prob::conditional_probability(&labels, &p))?;
            Ok(OutputRecord::rational(&echo, &v, *digits, ""))
        }
    }
}

fn limit(args: &LimitArgs) -> Emitted {
    let n3_list = args.n3.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",");
    let echo_with = |p: &str| format!("limit --p {p} --n2 {} --n3 {n3_list} --digits {}", args.n2, args.digits);
    let p: BigRational = match parse_rational(&args.p) {
        Ok(p) => p,
        Err(e) => return Emitted::One(OutputRecord::error(&echo_with(&args.p), e.to_string())),
    };
    let echo = echo_with(&p.to_string());
    match binomial_limit_tv(&p, args.n2, &args.n3) {
        Ok(rows) => Emitted::Many(
            rows.iter()
                .map(|(n3, tv)| OutputRecord::rational(&echo, tv, args.digits, format!("n3 = {n3}")))
                .collect(),
        ),
        Err(e) => Emitted::One(OutputRecord::error(&echo, e.to_string())),
    }
}

fn verify(kernels: &Kernels, args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let want = |s: Suite| args.suite == s || args.suite == Suite::All;
    let mut suites = Vec::new();
    if want(Suite::Agreement) {
        suites.push(run_backend_agreement_with(kernels, args.max_twice_ab));
    }
    if want(Suite::Degenerate) {
        suites.push(run_degenerate_identity_with(kernels, args.max_l));
    }
    if want(Suite::Distributions) {
        suites.push(run_distribution_identities_with(kernels, args.max_n3));
    }
    let report = VerifyOutput { passed: suites.iter().all(SuiteReport::passed), suites };
    let json = serde_json::to_string(&report).expect("reports serialize");
    let _ = writeln!(out, "{json}");
    if let Some(path) = &args.output {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    for s in report.suites.iter().filter(|s| !s.passed()) {
        let _ = writeln!(err, "suite {} failed: {} of {} cases", s.suite_name, s.failure_count, s.cases_run);
    }
    if report.passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}
