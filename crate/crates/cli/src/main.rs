//! `dser`: identity suites, rewriting and certificates from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::io::{Read as _, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dser_core::certificate;
use dser_core::localglobal::LocalizedWord;
use dser_core::rewrite::RuleTable;
use dser_core::suites::{self, SuiteConfig};
use dser_core::{parse_ring, AmbientForm, Error, Letter, Matrix, Ordering, QuadraticSpace, Ring, Word};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dser", version, about = "Elementary orthogonal group words: identity suites, rewriting, certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded identity suite.
    VerifyIdentities(VerifyArgs),
    /// Translate between oe letters and DSER letters.
    #[command(subcommand)]
    Rewrite(RewriteCommand),
    /// Rewrite g·e·g⁻¹ as a DSER word.
    Conjugate(ConjugateArgs),
    /// Split a 2×2 orthogonal matrix of the hyperbolic plane.
    SplitOh(SplitArgs),
    /// Clear denominators of a localized word by X ↦ s^N·X.
    Dilate(DilateArgs),
    /// Re-verify a certificate by multiplication.
    CheckCertificate(CheckArgs),
    /// Print the matrix of a word.
    Matrix(MatrixArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// roy, n1-table, tau-sigma, block-oq, eo-equality, split, dilation, closure or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Ring descriptor; `laurent` selects each suite's symbolic ring.
    #[arg(long, default_value = "laurent")]
    ring: String,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "interleaved")]
    ordering: Ordering,
    #[command(flatten)]
    format: FormatArgs,
    /// Use the corrupted rule table.
    #[arg(long, hide = true)]
    fault: bool,
}

#[derive(Args)]
struct FormatArgs {
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum RewriteCommand {
    /// oe_kl(a) as a word of DSER letters (φ = ψ̃).
    OeToDser {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        a: String,
        #[arg(long, default_value = "laurent")]
        ring: String,
    },
    /// A single DSER letter as an oe letter (φ = ψ̃).
    DserToOe {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// e.g. `ealpha:1:1:a`.
        #[arg(long)]
        letter: String,
        #[arg(long, default_value = "laurent")]
        ring: String,
    },
}

#[derive(Args)]
struct FormArgs {
    /// Ring descriptor; `laurent` infers a Laurent ring over Q from the
    /// parameters, with torus units invertible.
    #[arg(long, default_value = "laurent")]
    ring: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Gram matrix of q as JSON, `identity` or `hyperbolic`.
    #[arg(long, default_value = "identity")]
    phi: String,
    #[arg(long, default_value = "interleaved")]
    ordering: Ordering,
}

#[derive(Args)]
struct ConjugateArgs {
    /// Conjugator word, comma-separated short letters.
    #[arg(long)]
    g: String,
    /// DSER word.
    #[arg(long)]
    e: String,
    #[command(flatten)]
    form: FormArgs,
    #[arg(long, hide = true)]
    fault: bool,
}

#[derive(Args)]
struct SplitArgs {
    #[arg(long)]
    ring: String,
    /// JSON, e.g. `[[2,0],[0,4]]`.
    #[arg(long)]
    matrix: String,
}

#[derive(Args)]
struct DilateArgs {
    /// Localized word JSON file (`-` for stdin).
    #[arg(long)]
    word: String,
    /// Base ring; must agree with the file when both are given.
    #[arg(long)]
    ring: Option<String>,
    #[arg(long)]
    s: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    /// Certificate file (`-` for stdin).
    path: String,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    word: String,
    #[command(flatten)]
    form: FormArgs,
}

/// A failed command: an input problem (exit 2) or a failed check (exit 1).
enum Failure {
    Input(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::VerifyIdentities(a) => verify(a),
        Command::Rewrite(c) => rewrite(c),
        Command::Conjugate(a) => conjugate(a),
        Command::SplitOh(a) => split(a),
        Command::Dilate(a) => dilate(a),
        Command::CheckCertificate(a) => check(a),
        Command::Matrix(a) => matrix(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            print_json(&json!({"error": {"kind": e.kind(), "message": e.to_string()}}));
            ExitCode::from(2)
        }
    }
}

/// One JSON document per line; a closed pipe is not an error.
fn print_json(v: &Value) {
    let _ = writeln!(std::io::stdout().lock(), "{v}");
}

fn table(fault: bool) -> RuleTable {
    if fault {
        RuleTable::corrupted()
    } else {
        RuleTable::standard()
    }
}

/// Identifiers in a parameter expression.
fn identifiers(expr: &str, out: &mut Vec<String>) {
    let mut cur = String::new();
    for ch in expr.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_alphabetic() || ch == '_' || (!cur.is_empty() && ch.is_ascii_alphanumeric()) {
            cur.push(ch);
        } else if !cur.is_empty() {
            if !out.contains(&cur) {
                out.push(std::mem::take(&mut cur));
            }
            cur.clear();
        }
    }
}

/// Laurent ring over Q in the parameters of short-syntax words; units of
/// `tau`/`sigma` letters are invertible.
fn infer_ring(words: &[&str], extra: &[&str]) -> Result<Ring, Error> {
    let mut vars = Vec::new();
    let mut inv = Vec::new();
    for w in words {
        for letter in w.split(',') {
            let mut letter = letter.trim();
            while let Some(rest) = letter.strip_prefix("inv:") {
                letter = rest;
            }
            let parts: Vec<&str> = letter.split(':').collect();
            match parts.as_slice() {
                ["tau" | "sigma", u, _] => {
                    identifiers(u, &mut vars);
                    identifiers(u, &mut inv);
                }
                [_, .., last] => identifiers(last, &mut vars),
                _ => {}
            }
        }
    }
    for e in extra {
        identifiers(e, &mut vars);
    }
    if vars.is_empty() {
        return Ok(Ring::rationals());
    }
    Ring::laurent(&Ring::rationals(), &vars, &inv)
}

fn ring_for(descriptor: &str, words: &[&str], extra: &[&str]) -> Result<Ring, Error> {
    if descriptor == "laurent" {
        infer_ring(words, extra)
    } else {
        parse_ring(descriptor)
    }
}

fn parse_json(text: &str, what: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    Ok(text)
}

fn build_form(ring: &Ring, args: &FormArgs) -> Result<AmbientForm, Error> {
    let form = match args.phi.as_str() {
        "identity" => {
            let n = args.n.unwrap_or(2);
            let ones = vec![ring.one(); n];
            AmbientForm::new(QuadraticSpace::diagonal(ring, &ones)?, args.m, args.ordering)?
        }
        "hyperbolic" => {
            let n = args.n.unwrap_or(2);
            AmbientForm::hyperbolic(ring, n, args.m)?.reordered(args.ordering)
        }
        text => {
            let phi = dser_core::quadform::matrix_from_json(ring, &parse_json(text, "--phi")?)?;
            if args.n.is_some_and(|n| n != phi.rows()) {
                return Err(Error::DimensionMismatch(format!("--n disagrees with --phi ({} rows)", phi.rows())));
            }
            AmbientForm::new(QuadraticSpace::new(phi)?, args.m, args.ordering)?
        }
    };
    Ok(form)
}

/// Prints a certificate; a false `matrices_equal` is a verification failure.
fn emit(cert: Value) -> Outcome {
    let ok = cert["matrices_equal"] == json!(true);
    print_json(&cert);
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify(a: VerifyArgs) -> Outcome {
    let ring = if a.ring == "laurent" { None } else { Some(parse_ring(&a.ring)?) };
    let cfg = SuiteConfig {
        ring,
        n: a.n,
        m: a.m,
        seed: a.seed,
        ordering: a.ordering,
        table: table(a.fault),
    };
    let reports = suites::run(&a.suite, &cfg)?;
    let passed = reports.iter().all(|r| r.passed());
    if a.format.text {
        let mut out = String::new();
        for r in &reports {
            out.push_str(&r.to_text());
            eprintln!("{}: {:.3}s", r.suite, r.wall_time.as_secs_f64());
        }
        out.push_str(if passed { "PASS" } else { "FAIL" });
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    } else {
        print_json(&json!({"suite": a.suite, "passed": passed, "reports": reports}));
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn rewrite(c: RewriteCommand) -> Outcome {
    match c {
        RewriteCommand::OeToDser { n, m, k, l, a, ring } => {
            let ring = ring_for(&ring, &[], &[&a])?;
            let form = AmbientForm::hyperbolic(&ring, n, m)?;
            let a = ring.parse(&a)?;
            emit(certificate::oe_to_dser_certificate(k, l, &a, &form)?)
        }
        RewriteCommand::DserToOe { n, m, letter, ring } => {
            let ring = ring_for(&ring, &[&letter], &[])?;
            let form = AmbientForm::hyperbolic(&ring, n, m)?;
            let letter = Letter::parse_short(&letter, &ring)?;
            emit(certificate::dser_to_oe_certificate(&letter, &form)?)
        }
    }
}

fn conjugate(a: ConjugateArgs) -> Outcome {
    let ring = ring_for(&a.form.ring, &[&a.g, &a.e], &[])?;
    let form = build_form(&ring, &a.form)?;
    let g = Word::parse_short(&a.g, &ring)?;
    let e = Word::parse_short(&a.e, &ring)?;
    emit(certificate::conjugate_certificate(&g, &e, &form, table(a.fault))?)
}

fn split(a: SplitArgs) -> Outcome {
    let ring = parse_ring(&a.ring)?;
    let m = dser_core::quadform::matrix_from_json(&ring, &parse_json(&a.matrix, "--matrix")?)?;
    emit(certificate::split_certificate(&m)?)
}

fn dilate(a: DilateArgs) -> Outcome {
    let mut v = parse_json(&read_input(&a.word)?, &a.word)?;
    let obj = v
        .as_object_mut()
        .ok_or_else(|| Error::Parse("localized word must be a JSON object".into()))?;
    for (key, flag) in [("base_ring", &a.ring), ("s", &a.s)] {
        let Some(flag) = flag else { continue };
        match obj.get(key) {
            None => {
                obj.insert(key.into(), json!(flag));
            }
            Some(Value::String(t)) if t == flag => {}
            Some(Value::Number(t)) if t.to_string() == *flag => {}
            Some(other) => {
                return Err(Error::DescriptorMismatch {
                    left: format!("--{} {flag}", if key == "s" { "s" } else { "ring" }),
                    right: format!("{key} {other}"),
                }
                .into())
            }
        }
    }
    let w = LocalizedWord::from_json(&v)?;
    emit(certificate::dilation_certificate(&w)?)
}

fn check(a: CheckArgs) -> Outcome {
    let cert = parse_json(&read_input(&a.path)?, &a.path)?;
    let report = certificate::check(&cert)?;
    print_json(&json!({
        "kind": report.kind,
        "input_matches": report.input_matches,
        "matrices_equal": report.matrices_equal,
        "ok": report.ok(),
    }));
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn matrix(a: MatrixArgs) -> Outcome {
    let ring = ring_for(&a.form.ring, &[&a.word], &[])?;
    let form = build_form(&ring, &a.form)?;
    let w = Word::parse_short(&a.word, &ring)?;
    let v = form.with_two_inverted()?;
    let mat: Matrix = w.coerce(&ring, v.ring())?.matrix(&v)?;
    print_json(&json!({
        "context": form.header_json(),
        "word": w.to_json(&ring),
        "display": w.display(&ring),
        "matrix_ring": v.ring().to_string(),
        "matrix": mat.to_strings(),
    }));
    Ok(())
}
