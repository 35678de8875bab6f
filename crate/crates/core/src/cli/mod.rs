//! Command-line front end.
//!
//! Matrices are given inline (`"1 2; 3 4"`) or read from a file with an `@`
//! prefix (`@a.txt`, `@-` for standard input). Results go to standard output
//! and diagnostics to standard error.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse or input error, 3 domain
//! error, 4 a verification suite failed.

pub mod format;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::equivalence::{self, classify, lambda_gcd, root, theta};
use crate::error::DomainError;
use crate::matrix::{kron, Matrix, ShapeRatio};
use crate::par::Execution;
use crate::projection::{project, residual_matrix};
use crate::quotient::{self, QuotientVector};
use crate::rational::{sqrt_decimal, Rational};
use crate::stp::stp;
use crate::suites::{self, SUITES};

pub use format::{parse_matrix, MatrixDocument, ParseError, Source};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{source_name}: {error}")]
    Parse { source_name: String, error: ParseError },
    #[error("{path}: {error}")]
    Io { path: String, error: io::Error },
    #[error(transparent)]
    Domain(#[from] DomainError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse { .. } | CliError::Io { .. } => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "crossdim", version, about = "Semi-tensor products and the quotient space of cross-dimensional matrices, in exact arithmetic")]
struct Cli {
    /// Output format; structured output can be fed back in as input.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Decimal places for norms and distances.
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Semi-tensor product A ⋉ B.
    Stp {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Kronecker product A ⊗ B.
    Kron {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Irreducible root and multiplicity.
    Root {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Equivalence test, with least common multiple and greatest common divisor.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Shape ratio and component index.
    Info {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Class sum ⟨A⟩ ⊞ ⟨B⟩ (prints the root).
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Class difference ⟨A⟩ ⊟ ⟨B⟩ (prints the root).
    Sub {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Weighted inner product.
    Inner {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Class norm (exact square and decimal).
    Norm {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Distance between classes (exact square and decimal).
    Dist {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Orthogonal projection onto a component of the same shape ratio.
    Project {
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Target component index.
        #[arg(long)]
        target: usize,
        /// Also print the residual class and the lifted residual matrix.
        #[arg(long)]
        residual: bool,
    },
    /// Run a named property suite (`all` runs every suite).
    Verify {
        #[arg(long)]
        suite: String,
        /// Random cases per suite; defaults to 1000 (100 for minimality).
        #[arg(long)]
        cases: Option<u64>,
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
        /// Run cases one after another instead of in parallel.
        #[arg(long)]
        sequential: bool,
    },
}

/// Reads a matrix argument: inline text, `@path`, or `@-` for stdin.
pub fn load_document(arg: &str) -> Result<MatrixDocument, CliError> {
    let (source, text) = match arg.strip_prefix('@') {
        Some("-") => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|error| CliError::Io { path: "<stdin>".into(), error })?;
            (Source::Stdin, buf)
        }
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|error| CliError::Io { path: path.to_string(), error })?;
            (Source::File(PathBuf::from(path)), text)
        }
        None => (Source::Inline, arg.to_string()),
    };
    let parsed = parse_matrix(&text)
        .map_err(|error| CliError::Parse { source_name: source.to_string(), error })?;
    Ok(MatrixDocument { source, parsed })
}

fn load(arg: &str) -> Result<Matrix, CliError> {
    load_document(arg).map(|d| d.parsed)
}

/// One named value in a command's result.
enum Field {
    Matrix(Matrix),
    Exact(Rational),
    Decimal(String),
    Count(usize),
    Flag(bool),
    Ratio(ShapeRatio),
    Text(String),
}

enum Report {
    /// A bare matrix; its structured form is a matrix document.
    Matrix(Matrix),
    Fields(Vec<(String, Field)>),
}

fn field(name: &str, value: Field) -> (String, Field) {
    (name.to_string(), value)
}

fn render(report: &Report, fmt: OutputFormat) -> String {
    match (report, fmt) {
        (Report::Matrix(m), OutputFormat::Text) => format::to_text(m),
        (Report::Matrix(m), OutputFormat::Structured) => format::to_structured(m).to_string(),
        (Report::Fields(fields), OutputFormat::Text) => fields
            .iter()
            .map(|(k, v)| match v {
                Field::Matrix(m) => format!("{k}:\n{m}"),
                Field::Exact(r) => format!("{k}: {r}"),
                Field::Decimal(s) | Field::Text(s) => format!("{k}: {s}"),
                Field::Count(n) => format!("{k}: {n}"),
                Field::Flag(b) => format!("{k}: {b}"),
                Field::Ratio(mu) => format!("{k}: {mu}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        (Report::Fields(fields), OutputFormat::Structured) => {
            let mut obj = Map::new();
            for (k, v) in fields {
                let value = match v {
                    Field::Matrix(m) => format::to_structured(m),
                    Field::Exact(r) => Value::String(r.to_string()),
                    Field::Decimal(s) | Field::Text(s) => Value::String(s.clone()),
                    Field::Count(n) => json!(n),
                    Field::Flag(b) => json!(b),
                    Field::Ratio(mu) => Value::String(mu.to_string()),
                };
                obj.insert(k.clone(), value);
            }
            Value::Object(obj).to_string()
        }
    }
}

fn decimal(r: &Rational, digits: usize) -> Field {
    Field::Decimal(sqrt_decimal(r, digits).expect("squared quantities are nonnegative"))
}

fn execute(cli: &Cli) -> Result<(Report, bool), CliError> {
    let digits = cli.precision;
    let report = match &cli.command {
        Command::Stp { a, b } => Report::Matrix(stp(&load(a)?, &load(b)?)),
        Command::Kron { a, b } => Report::Matrix(kron(&load(a)?, &load(b)?)),
        Command::Root { a } => {
            let f = root(&load(a)?);
            Report::Fields(vec![field("root", Field::Matrix(f.divisor)), field("multiplicity", Field::Count(f.multiplicity))])
        }
        Command::Equiv { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            let mut fields = vec![field("equivalent", Field::Flag(equivalence::equivalent(&a, &b)))];
            if let (Some(t), Some(l)) = (theta(&a, &b), lambda_gcd(&a, &b)) {
                fields.push(field("theta", Field::Matrix(t)));
                fields.push(field("lambda", Field::Matrix(l)));
            }
            Report::Fields(fields)
        }
        Command::Info { a } => {
            let a = load(a)?;
            let (mu, k) = classify(&a);
            let f = root(&a);
            Report::Fields(vec![
                field("rows", Field::Count(a.rows())),
                field("cols", Field::Count(a.cols())),
                field("shape_ratio", Field::Ratio(mu)),
                field("component", Field::Count(k)),
                field("root_multiplicity", Field::Count(f.multiplicity)),
                field("root_component", Field::Count(k / f.multiplicity)),
            ])
        }
        Command::Add { a, b } => {
            let (x, y) = (QuotientVector::of(&load(a)?), QuotientVector::of(&load(b)?));
            Report::Matrix(quotient::class_add(&x, &y)?.root().clone())
        }
        Command::Sub { a, b } => {
            let (x, y) = (QuotientVector::of(&load(a)?), QuotientVector::of(&load(b)?));
            Report::Matrix(quotient::class_sub(&x, &y)?.root().clone())
        }
        Command::Inner { a, b } => {
            let v = quotient::weighted_inner(&load(a)?, &load(b)?)?;
            Report::Fields(vec![field("inner", Field::Exact(v))])
        }
        Command::Norm { a } => {
            let n = quotient::norm_sq(&QuotientVector::of(&load(a)?));
            Report::Fields(vec![field("norm_sq", Field::Exact(n.clone())), field("norm", decimal(&n, digits))])
        }
        Command::Dist { a, b } => {
            let (x, y) = (QuotientVector::of(&load(a)?), QuotientVector::of(&load(b)?));
            let d = quotient::distance_sq(&x, &y)?;
            Report::Fields(vec![field("distance_sq", Field::Exact(d.clone())), field("distance", decimal(&d, digits))])
        }
        Command::Project { a, target, residual } => {
            let x = QuotientVector::of(&load(a)?);
            let r = project(&x, *target)?;
            let mut fields = vec![
                field("projection", Field::Matrix(r.projection.root().clone())),
                field("target_index", Field::Count(r.target_index)),
                field("source_index", Field::Count(r.source_index)),
                field("lift_index", Field::Count(r.lift_index)),
                field("block_size", Field::Count(r.block_size)),
                field("distance_sq", Field::Exact(r.distance_sq_to_target.clone())),
                field("distance", decimal(&r.distance_sq_to_target, digits)),
            ];
            if *residual {
                fields.push(field("residual", Field::Matrix(r.residual.root().clone())));
                fields.push(field("residual_matrix", Field::Matrix(residual_matrix(&x, *target)?)));
            }
            Report::Fields(fields)
        }
        Command::Verify { suite, cases, seed, sequential } => return verify(suite, *cases, *seed, *sequential),
    };
    Ok((report, true))
}

fn verify(suite: &str, cases: Option<u64>, seed: u64, sequential: bool) -> Result<(Report, bool), CliError> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(CliError::Usage(format!("unknown suite `{suite}`; available: all, {}", SUITES.join(", "))));
    };
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let mut fields = Vec::new();
    let mut all_passed = true;
    for name in names {
        let n = cases.unwrap_or(if name == "minimality" { 100 } else { 1000 });
        let rep = suites::run_suite(name, n, seed, exec).expect("name checked above");
        all_passed &= rep.passed();
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        let mut line = format!("{status} ({} cases, {} failures)", rep.cases, rep.failures);
        for note in &rep.notes {
            line.push_str("; ");
            line.push_str(&note.replace('\n', " / "));
        }
        fields.push((name.to_string(), Field::Text(line)));
    }
    Ok((Report::Fields(fields), all_passed))
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok((report, passed)) => {
            let _ = writeln!(out, "{}", render(&report, cli.format));
            if passed {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
