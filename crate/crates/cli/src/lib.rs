//! Command-line front end for computing and verifying Redei-Berge functions.

pub mod instance;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use redei_berge::digraph::Digraph;
use redei_berge::ncsym::{Basis, NcSym, SerializedCsym, SerializedElement};
use redei_berge::redeiberge::{
    check_identities_with_partner, w_by_definition, w_by_deletion_contraction, w_by_permutations,
    Check, Outcome, VerificationReport, MAX_DELETION_CONTRACTION, MAX_PERMUTATIONS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest instance the CLI hands to the definition algorithm.
pub const MAX_CLI_DEFINITION: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "redei-berge",
    version,
    about = "Redei-Berge functions of labeled digraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for generator specs that omit one, and for `batch`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the expansion of W_X (or U_X with --commutative).
    Compute(ComputeArgs),
    /// Run identity checks on one instance.
    Verify(VerifyArgs),
    /// Time every applicable algorithm on one instance.
    Bench(BenchArgs),
    /// Run identity checks over a seeded random family.
    Batch(BatchArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Digraph file or generator spec (complete:n, discrete:n, path:n, cycle:n,
    /// random:n:p:seed, tournament:n:seed).
    pub instance: String,
    #[arg(long, value_enum, default_value_t = BasisArg::M)]
    pub basis: BasisArg,
    /// Let the variables commute.
    #[arg(long)]
    pub commutative: bool,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    pub algorithm: Algorithm,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub instance: String,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    pub checks: String,
    /// Second digraph for the product check.
    #[arg(long)]
    pub partner: Option<String>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub instance: String,
    #[arg(long, default_value_t = 1)]
    pub repeat: u32,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// Vertices per instance.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Edge probability, loops included.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, default_value = "all")]
    pub checks: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    M,
    P,
    E,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::P => Basis::P,
            BasisArg::E => Basis::E,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Definition,
    Permutations,
    DeletionContraction,
    Auto,
}

impl Algorithm {
    pub const CONCRETE: [Algorithm; 3] = [
        Algorithm::Definition,
        Algorithm::Permutations,
        Algorithm::DeletionContraction,
    ];

    pub fn limit(self) -> usize {
        match self {
            Algorithm::Definition => MAX_CLI_DEFINITION,
            Algorithm::Permutations | Algorithm::Auto => MAX_PERMUTATIONS,
            Algorithm::DeletionContraction => MAX_DELETION_CONTRACTION,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Definition => "definition",
            Algorithm::Permutations => "permutations",
            Algorithm::DeletionContraction => "deletion-contraction",
            Algorithm::Auto => "auto",
        }
    }

    /// `W_X` by this algorithm; `auto` uses the one with the largest range.
    pub fn compute(self, x: &Digraph) -> Result<NcSym, String> {
        if x.n() > self.limit() {
            return Err(format!(
                "{} algorithm handles at most {} vertices, instance has {}",
                self.name(),
                self.limit(),
                x.n()
            ));
        }
        let result = match self {
            Algorithm::Definition => w_by_definition(x),
            Algorithm::Permutations | Algorithm::Auto => w_by_permutations(x),
            Algorithm::DeletionContraction => w_by_deletion_contraction(x),
        };
        result.map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
struct ResultEntry {
    check: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

impl From<&VerificationReport> for ResultEntry {
    fn from(r: &VerificationReport) -> Self {
        let (witness, reason) = match &r.outcome {
            Outcome::Pass => (None, None),
            Outcome::Fail { witness } => (Some(witness.clone()), None),
            Outcome::Skipped { reason } => (None, Some(reason.clone())),
        };
        ResultEntry {
            check: r.check.name().to_string(),
            status: r.outcome.status(),
            witness,
            reason,
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn parse_checks(list: &str) -> Result<Vec<Check>, String> {
    if list == "all" {
        return Ok(Check::ALL.to_vec());
    }
    list.split(',')
        .map(|s| {
            s.trim()
                .parse::<Check>()
                .map_err(|_| format!("unknown check {s:?}"))
        })
        .collect()
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    writeln!(out, "{text}").map_err(|e| e.to_string())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    match &cli.command {
        Command::Compute(a) => compute(cli, a, out),
        Command::Verify(a) => verify(cli, a, out),
        Command::Bench(a) => bench(cli, a, out),
        Command::Batch(a) => batch(cli, a, out),
    }
}

fn compute(cli: &Cli, a: &ComputeArgs, out: &mut dyn Write) -> Result<i32, String> {
    let x = instance::load(&a.instance, cli.seed)?;
    let w = a.algorithm.compute(&x)?.to_basis(a.basis.into());
    let io = |e: std::io::Error| e.to_string();
    if a.commutative {
        let u = w.commutative_image();
        match cli.format {
            Format::Text => {
                for (lambda, c) in u.terms() {
                    writeln!(out, "{}{lambda}  coeff {c}", u.basis()).map_err(io)?;
                }
                if u.is_zero() {
                    writeln!(out, "0").map_err(io)?;
                }
            }
            Format::Json => emit_json(
                out,
                &json!({
                    "instance": a.instance,
                    "command": "compute",
                    "commutative": true,
                    "element": SerializedCsym::from(u),
                    "results": [],
                }),
            )?,
        }
    } else {
        match cli.format {
            Format::Text => {
                for (pi, c) in w.terms() {
                    writeln!(out, "{}[{pi}]  coeff {c}", w.basis()).map_err(io)?;
                }
                if w.is_zero() {
                    writeln!(out, "0").map_err(io)?;
                }
            }
            Format::Json => emit_json(
                out,
                &json!({
                    "instance": a.instance,
                    "command": "compute",
                    "commutative": false,
                    "element": SerializedElement::from(w),
                    "results": [],
                }),
            )?,
        }
    }
    Ok(EXIT_OK)
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, String> {
    let x = instance::load(&a.instance, cli.seed)?;
    let checks = parse_checks(&a.checks)?;
    let partner = a
        .partner
        .as_deref()
        .map(|p| instance::load(p, cli.seed))
        .transpose()?;
    let reports = check_identities_with_partner(&x, partner.as_ref(), &checks);
    let failed = reports.iter().any(VerificationReport::failed);
    match cli.format {
        Format::Text => {
            for r in &reports {
                writeln!(out, "{r}").map_err(|e| e.to_string())?;
            }
        }
        Format::Json => {
            let results: Vec<ResultEntry> = reports.iter().map(ResultEntry::from).collect();
            emit_json(
                out,
                &json!({ "instance": a.instance, "command": "verify", "results": results }),
            )?;
        }
    }
    Ok(if failed { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn bench(cli: &Cli, a: &BenchArgs, out: &mut dyn Write) -> Result<i32, String> {
    let x = instance::load(&a.instance, cli.seed)?;
    let repeat = a.repeat.max(1);
    let mut rows = Vec::new();
    let mut reference: Option<NcSym> = None;
    let mut disagree = false;
    for alg in Algorithm::CONCRETE {
        if x.n() > alg.limit() {
            rows.push((alg, None, None));
            continue;
        }
        let start = Instant::now();
        let mut w = None;
        for _ in 0..repeat {
            w = Some(alg.compute(&x)?.to_basis(Basis::M));
        }
        let ms = start.elapsed().as_secs_f64() * 1000.0 / f64::from(repeat);
        let w = w.expect("repeat is at least one");
        let agrees = match &reference {
            None => true,
            Some(r) => *r == w,
        };
        disagree |= !agrees;
        reference.get_or_insert(w);
        rows.push((alg, Some(ms), Some(agrees)));
    }
    match cli.format {
        Format::Text => {
            let io = |e: std::io::Error| e.to_string();
            writeln!(out, "{:<22} {:>12}  agrees", "algorithm", "ms/run").map_err(io)?;
            for (alg, ms, agrees) in &rows {
                match (ms, agrees) {
                    (Some(ms), Some(ok)) => writeln!(
                        out,
                        "{:<22} {ms:>12.3}  {}",
                        alg.name(),
                        if *ok { "yes" } else { "NO" }
                    )
                    .map_err(io)?,
                    _ => writeln!(out, "{:<22} {:>12}  -", alg.name(), "over limit").map_err(io)?,
                }
            }
        }
        Format::Json => {
            let results: Vec<Value> = rows
                .iter()
                .map(|(alg, ms, agrees)| match (ms, agrees) {
                    (Some(ms), Some(ok)) => json!({
                        "check": alg.name(),
                        "status": if *ok { "pass" } else { "fail" },
                        "ms": ms,
                    }),
                    _ => json!({ "check": alg.name(), "status": "skipped" }),
                })
                .collect();
            emit_json(
                out,
                &json!({ "instance": a.instance, "command": "bench", "results": results }),
            )?;
        }
    }
    Ok(if disagree { EXIT_CHECK_FAILED } else { EXIT_OK })
}

#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
    skipped: usize,
    first_failure: Option<String>,
}

fn batch(cli: &Cli, a: &BatchArgs, out: &mut dyn Write) -> Result<i32, String> {
    if !(0.0..=1.0).contains(&a.p) {
        return Err("edge probability must lie in [0, 1]".into());
    }
    if a.n > MAX_PERMUTATIONS {
        return Err(format!(
            "batch instances are limited to {MAX_PERMUTATIONS} vertices"
        ));
    }
    let checks = parse_checks(&a.checks)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut tallies: BTreeMap<Check, Tally> =
        checks.iter().map(|&c| (c, Tally::default())).collect();
    for _ in 0..a.count {
        let x = Digraph::random(a.n, a.p, &mut rng);
        for r in check_identities_with_partner(&x, None, &checks) {
            let t = tallies.entry(r.check).or_default();
            match r.outcome {
                Outcome::Pass => t.passed += 1,
                Outcome::Skipped { .. } => t.skipped += 1,
                Outcome::Fail { witness } => {
                    t.failed += 1;
                    t.first_failure
                        .get_or_insert(format!("{}: {witness}", r.instance));
                }
            }
        }
    }
    let any_failed = tallies.values().any(|t| t.failed > 0);
    let family = format!("random:{}:{}:{} x{}", a.n, a.p, cli.seed, a.count);
    match cli.format {
        Format::Text => {
            let io = |e: std::io::Error| e.to_string();
            writeln!(out, "{family}").map_err(io)?;
            for check in &checks {
                let t = &tallies[check];
                writeln!(
                    out,
                    "{:<24} pass {:>4}  fail {:>4}  skipped {:>4}",
                    check.name(),
                    t.passed,
                    t.failed,
                    t.skipped
                )
                .map_err(io)?;
                if let Some(w) = &t.first_failure {
                    writeln!(out, "  first failure: {w}").map_err(io)?;
                }
            }
        }
        Format::Json => {
            let results: Vec<Value> = checks
                .iter()
                .map(|check| {
                    let t = &tallies[check];
                    let mut v = json!({
                        "check": check.name(),
                        "status": if t.failed > 0 { "fail" } else { "pass" },
                        "passed": t.passed,
                        "failed": t.failed,
                        "skipped": t.skipped,
                    });
                    if let Some(w) = &t.first_failure {
                        v["witness"] = json!(w);
                    }
                    v
                })
                .collect();
            emit_json(
                out,
                &json!({ "instance": family, "command": "batch", "results": results }),
            )?;
        }
    }
    Ok(if any_failed {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    })
}
