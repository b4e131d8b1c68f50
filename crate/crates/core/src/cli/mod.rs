//! Command-line front end. `run` is the whole program; the binary only
//! forwards its arguments and exit status.

pub mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use num::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::celldecomp::{self, build_decomposition};
use crate::flipword::{canonical_words, matrix_to_word, parse_word, word_to_matrix, FlipWord, Sl2z, WordError};
use crate::montri::{self, build_triangulation};
use crate::realise::{certify, holonomy_rep, Certificate, MirrorPolicy, RealiseError};

pub use svg::{emit_svg, labelled_points, SvgKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NONTRIVIAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ptb-cr", version, about = "Branched CR structures on once-punctured torus bundles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Cyclic flip word over R and L, e.g. RRL.
    #[arg(long)]
    pub word: Option<String>,
    /// Monodromy matrix entries a,b,c,d (row major).
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize a word or decompose a matrix into a word.
    Flipword {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Monodromy ideal triangulation and its edge classes.
    Triangulate {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Cell decomposition with slabs, face pairings and edge classes.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Edge holonomy certificates.
    Certify {
        #[arg(long, conflicts_with_all = ["matrix", "all_words"])]
        word: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "all_words")]
        matrix: Option<String>,
        /// Certify every word up to `--max-len`, one per rotation class.
        #[arg(long, requires = "max_len")]
        all_words: bool,
        #[arg(long)]
        max_len: Option<usize>,
        /// Rotate L-first words to R-first form for the representation.
        #[arg(long)]
        rotate_mirror: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Images of the generators under the holonomy representation.
    Holonomy {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        rotate_mirror: bool,
        #[command(flatten)]
        out: Output,
    },
    /// SVG picture of the development around an edge.
    DevelopSvg {
        #[arg(long, value_enum)]
        kind: SvgKind,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug)]
struct Failure {
    status: i32,
    code: &'static str,
    message: String,
}

impl Failure {
    fn invalid(code: &'static str, message: impl Into<String>) -> Self {
        Failure { status: EXIT_INVALID, code, message: message.into() }
    }
}

impl From<WordError> for Failure {
    fn from(e: WordError) -> Self {
        let code = match e {
            WordError::Empty => "EMPTY_WORD",
            WordError::BadCharacter { .. } => "BAD_CHARACTER",
            WordError::MissingR => "MISSING_R",
            WordError::MissingL => "MISSING_L",
            WordError::NotUnimodular => "NOT_UNIMODULAR",
            WordError::NotHyperbolic { .. } => "NOT_HYPERBOLIC",
        };
        Failure::invalid(code, e.to_string())
    }
}

impl From<RealiseError> for Failure {
    fn from(e: RealiseError) -> Self {
        match e {
            RealiseError::MirrorFormUnspecified => Failure::invalid("MIRROR_FORM_UNSPECIFIED", e.to_string()),
            other => Failure { status: EXIT_INTERNAL, code: "INTERNAL", message: other.to_string() },
        }
    }
}

fn parse_matrix(text: &str) -> Result<Sl2z, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Failure::invalid("BAD_MATRIX", "expected four comma-separated integers"));
    }
    let v = parts
        .iter()
        .map(|p| p.parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::invalid("BAD_MATRIX", e.to_string()))?;
    let [a, b, c, d]: [BigInt; 4] = v.try_into().expect("four entries");
    Ok(Sl2z::new(a, b, c, d)?)
}

/// The word a pipeline command runs on. Matrices of negative trace are
/// refused: only `flipword` reports them.
fn pipeline_word(word: Option<&str>, matrix: Option<&str>) -> Result<FlipWord, Failure> {
    match (word, matrix) {
        (Some(w), None) => Ok(parse_word(w)?),
        (None, Some(m)) => {
            let dec = matrix_to_word(&parse_matrix(m)?)?;
            if dec.negated {
                return Err(Failure::invalid(
                    "NEGATIVE_EIGENVALUES",
                    "negative trace: the bundle of -f differs; pass -f to use its word",
                ));
            }
            Ok(dec.word)
        }
        _ => Err(Failure::invalid("USAGE", "give exactly one of --word or --matrix")),
    }
}

fn flipword_json(input: &Input) -> Result<serde_json::Value, Failure> {
    if let Some(w) = &input.word {
        let w = parse_word(w)?;
        let norm = w.normalized();
        return Ok(json!({
            "schema": 1,
            "input": w,
            "word": norm,
            "matrix": word_to_matrix(&norm),
            "trace": word_to_matrix(&norm).trace().to_string(),
            "gaps": norm.gaps(),
            "exponents": norm.exponents(),
        }));
    }
    let m = parse_matrix(input.matrix.as_deref().unwrap_or_default())?;
    let dec = matrix_to_word(&m)?;
    Ok(json!({
        "schema": 1,
        "input": m,
        "word": dec.word,
        "conjugator": dec.conjugator,
        "negated": dec.negated,
        "gaps": dec.word.gaps(),
        "exponents": dec.word.exponents(),
    }))
}

fn holonomy_json(w: &FlipWord, policy: MirrorPolicy) -> Result<serde_json::Value, Failure> {
    let h = holonomy_rep(w, policy)?;
    let [a, b, t] = h.cleared();
    Ok(json!({
        "schema": 1,
        "word": w,
        "M_alpha": h.m_alpha,
        "M_beta": h.m_beta,
        "M_tau": h.m_tau,
        "cleared": { "M_alpha": a, "M_beta": b, "M_tau": t },
    }))
}

fn worker_count() -> usize {
    let avail = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    std::env::var("PTB_CR_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .map_or(avail, |cap| cap.min(avail))
}

/// Certifies many words in parallel; results come back in input order.
pub fn certify_many(words: &[FlipWord], policy: MirrorPolicy, workers: usize) -> Result<Vec<Certificate>, RealiseError> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<Certificate, RealiseError>>>> = Mutex::new(vec![None; words.len()]);
    std::thread::scope(|s| {
        for _ in 0..workers.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= words.len() {
                    break;
                }
                let c = certify(&words[i], policy);
                slots.lock().expect("no poisoned workers")[i] = Some(c);
            });
        }
    });
    slots
        .into_inner()
        .expect("no poisoned workers")
        .into_iter()
        .map(|c| c.expect("every slot filled"))
        .collect()
}

#[derive(Serialize)]
struct Sweep {
    schema: u32,
    max_len: usize,
    count: usize,
    all_trivial: bool,
    certificates: Vec<Certificate>,
}

enum Payload {
    Json(serde_json::Value, i32),
    Text(String),
}

fn policy(rotate: bool) -> MirrorPolicy {
    if rotate {
        MirrorPolicy::RotateToRFirst
    } else {
        MirrorPolicy::Reject
    }
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn execute(cmd: &Command) -> Result<Payload, Failure> {
    Ok(match cmd {
        Command::Flipword { input, .. } => Payload::Json(flipword_json(input)?, EXIT_OK),
        Command::Triangulate { input, .. } => {
            let w = pipeline_word(input.word.as_deref(), input.matrix.as_deref())?;
            Payload::Json(montri::to_json(&build_triangulation(&w)), EXIT_OK)
        }
        Command::Decompose { input, .. } => {
            let w = pipeline_word(input.word.as_deref(), input.matrix.as_deref())?;
            Payload::Json(celldecomp::to_json(&build_decomposition(&build_triangulation(&w))), EXIT_OK)
        }
        Command::Certify { word, matrix, all_words, max_len, rotate_mirror, .. } => {
            if *all_words {
                let max_len = max_len.unwrap_or(0);
                let words = canonical_words(max_len);
                let certs = certify_many(&words, policy(*rotate_mirror), worker_count())?;
                let all_trivial = certs.iter().all(Certificate::all_trivial);
                let sweep = Sweep { schema: 1, max_len, count: certs.len(), all_trivial, certificates: certs };
                let status = if all_trivial { EXIT_OK } else { EXIT_NONTRIVIAL };
                Payload::Json(to_value(&sweep), status)
            } else {
                let w = pipeline_word(word.as_deref(), matrix.as_deref())?;
                let c = certify(&w, policy(*rotate_mirror))?;
                let status = if c.all_trivial() { EXIT_OK } else { EXIT_NONTRIVIAL };
                Payload::Json(to_value(&c), status)
            }
        }
        Command::Holonomy { input, rotate_mirror, .. } => {
            let w = pipeline_word(input.word.as_deref(), input.matrix.as_deref())?;
            Payload::Json(holonomy_json(&w, policy(*rotate_mirror))?, EXIT_OK)
        }
        Command::DevelopSvg { kind, n, .. } => Payload::Text(emit_svg(*kind, *n)),
    })
}

fn output_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Flipword { out, .. }
        | Command::Triangulate { out, .. }
        | Command::Decompose { out, .. }
        | Command::Certify { out, .. }
        | Command::Holonomy { out, .. }
        | Command::DevelopSvg { out, .. } => out.output.as_ref(),
    }
}

fn envelope(f: &Failure) -> String {
    let v = json!({ "schema": 1, "error": { "code": f.code, "message": f.message } });
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

/// Parses and runs a command line, writing results and error envelopes to
/// `stdout` (or to the `--output` file). Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            let _ = stdout.write_all(envelope(&Failure::invalid("USAGE", first)).as_bytes());
            return EXIT_INVALID;
        }
    };
    let (text, status) = match execute(&cli.command) {
        Ok(Payload::Json(v, status)) => (serde_json::to_string_pretty(&v).expect("serializable") + "\n", status),
        Ok(Payload::Text(t)) => (t, EXIT_OK),
        Err(f) => {
            let _ = stdout.write_all(envelope(&f).as_bytes());
            return f.status;
        }
    };
    match output_path(&cli.command) {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let f = Failure { status: EXIT_INTERNAL, code: "IO", message: e.to_string() };
                let _ = stdout.write_all(envelope(&f).as_bytes());
                return f.status;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    status
}

pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let status = run(args, &mut lock);
    let _ = lock.flush();
    status
}
