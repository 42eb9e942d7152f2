use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use symkuls::algebra::Algebra;
use symkuls::blocks::blocks;
use symkuls::error::Error;
use symkuls::fingerprint::{analyze, condensation_check, Analysis};
use symkuls::form::SymForm;
use symkuls::oracle::{run_oracle, DEFAULT_BUDGET};
use symkuls::report;
use symkuls::speclang::{load_file, parse_scalars, AlgebraDocument, LoadError};

mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const ALGEBRA: u8 = 2;
    pub const FORM: u8 = 3;
    pub const FIELD_MISMATCH: u8 = 4;
    pub const NOT_IDEMPOTENT: u8 = 5;
    pub const TOO_LARGE: u8 = 6;
    pub const DIFFERENT: u8 = 10;
    pub const ORACLE_FAIL: u8 = 12;
    pub const USAGE: u8 = 64;
    pub const INTERNAL: u8 = 70;
}

#[derive(Parser)]
#[command(
    name = "symkuls",
    version,
    about = "Külshammer ideals and derived-equivalence fingerprints of symmetric algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and check associativity, the unit and the form.
    Validate { file: PathBuf },
    /// Print the fingerprint and the inclusion verdicts.
    Fingerprint {
        file: PathBuf,
        /// List T_n^perp for n = 1..=N (defaults to the stabilization point).
        #[arg(long)]
        nmax: Option<usize>,
        /// Flat key=value output.
        #[arg(long)]
        machine: bool,
    },
    /// Compare the invariant entries of two fingerprints.
    Compare { a: PathBuf, b: PathBuf },
    /// Condense to eAe and check the condensation identity for every n.
    Condense {
        file: PathBuf,
        /// Coordinates of e, e.g. "1 0 0 0".
        #[arg(long)]
        idempotent: String,
    },
    /// List block idempotents and which blocks are simple.
    Blocks { file: PathBuf },
    /// Cross-check against brute-force enumeration.
    Oracle {
        file: PathBuf,
        /// Check n = 1..=N (defaults to the stabilization point).
        #[arg(long)]
        n: Option<u32>,
        /// Maximum number of algebra elements to enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::InvalidAlgebra(_)
        | Error::InvalidTable(_)
        | Error::BadParameters(_)
        | Error::BadTree(_)
        | Error::DimensionMismatch { .. } => exit::ALGEBRA,
        Error::DegenerateForm | Error::NotSymmetricForm | Error::FormNotFound { .. } => exit::FORM,
        Error::FieldMismatch { .. } => exit::FIELD_MISMATCH,
        Error::NotIdempotent => exit::NOT_IDEMPOTENT,
        Error::TooLarge { .. } => exit::TOO_LARGE,
        Error::InvalidField(_) => exit::INPUT,
        _ => exit::INTERNAL,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(error_code(&e), format!("error: {e}"))
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Build(inner) => inner.into(),
            other => Failure::new(exit::INPUT, format!("error: {other}")),
        }
    }
}

struct Loaded {
    doc: AlgebraDocument,
    algebra: Algebra,
    form: SymForm,
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let (doc, algebra, form) = load_file(path)?;
    Ok(Loaded { doc, algebra, form })
}

/// Thread cap from `SYMKULS_THREADS`; unset or invalid means one thread.
fn thread_cap() -> usize {
    std::env::var("SYMKULS_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&n| n > 0).unwrap_or(1)
}

fn analysis(l: &Loaded) -> Result<Analysis, Error> {
    analyze(&l.algebra, &l.form)
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Validate { file } => {
            let l = load(&file)?;
            Ok((
                format!(
                    "ok: {} is a symmetric algebra of dimension {} over {}\n",
                    l.doc.name,
                    l.algebra.dim(),
                    report::field_name(l.algebra.field())
                ),
                exit::OK,
            ))
        }
        Command::Fingerprint { file, nmax, machine } => {
            if nmax == Some(0) {
                return Err(Failure::new(exit::USAGE, "error: --nmax must be at least 1"));
            }
            let l = load(&file)?;
            let an = analysis(&l)?;
            let verdicts = an.verdicts()?;
            Ok((report::fingerprint_report(&l.doc.name, &an, &verdicts, nmax, machine), exit::OK))
        }
        Command::Compare { a, b } => {
            let la = load(&a)?;
            let lb = load(&b)?;
            let (fa, fb) = (la.algebra.field(), lb.algebra.field());
            if fa.p() != fb.p() || fa.q() != fb.q() {
                return Err(Error::FieldMismatch { left: fa.to_string(), right: fb.to_string() }.into());
            }
            let (ra, rb) = if thread_cap() > 1 {
                std::thread::scope(|s| {
                    let h = s.spawn(|| analysis(&lb));
                    let ra = analysis(&la);
                    (ra, h.join().expect("fingerprint thread panicked"))
                })
            } else {
                (analysis(&la), analysis(&lb))
            };
            let (fpa, fpb) = (ra?.fingerprint(), rb?.fingerprint());
            let diffs = fpa.differences(&fpb);
            let text = report::compare_report((&la.doc.name, &fpa), (&lb.doc.name, &fpb), &diffs);
            Ok((text, if diffs.is_empty() { exit::OK } else { exit::DIFFERENT }))
        }
        Command::Condense { file, idempotent } => {
            let l = load(&file)?;
            let f = l.algebra.field();
            let e = parse_scalars(f, &idempotent)
                .map_err(|d| Failure::new(exit::INPUT, format!("error: --idempotent: {}", d.message)))?;
            if e.len() != l.algebra.dim() {
                return Err(Failure::new(
                    exit::INPUT,
                    format!("error: --idempotent needs {} coordinates, got {}", l.algebra.dim(), e.len()),
                ));
            }
            let check = condensation_check(&l.algebra, &l.form, &e)?;
            Ok((report::condense_report(&l.doc.name, f, &e, &check.fingerprint, &check.rows), exit::OK))
        }
        Command::Blocks { file } => {
            let l = load(&file)?;
            let d = blocks(&l.algebra, &l.form)?;
            Ok((report::blocks_report(&l.doc.name, &l.algebra, &d), exit::OK))
        }
        Command::Oracle { file, n, budget } => {
            let l = load(&file)?;
            let n_max = match n {
                Some(n) => n,
                None => {
                    let size = symkuls::oracle::element_count(l.algebra.field().q(), l.algebra.dim());
                    if size > budget {
                        return Err(Error::TooLarge { size, budget }.into());
                    }
                    symkuls::kulshammer::t_chain(&l.algebra)?.len() as u32
                }
            };
            let checks = run_oracle(&l.algebra, &l.form, n_max, budget)?;
            let code = if checks.iter().all(|c| c.passed) { exit::OK } else { exit::ORACLE_FAIL };
            Ok((report::oracle_report(&l.doc.name, &checks), code))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
