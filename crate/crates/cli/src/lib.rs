//! Command line front end: argument parsing, problem files, dispatch and
//! JSON output. [`run`] is the whole tool minus process exit, so it can be
//! driven in-process.

pub mod commands;
pub mod error;
pub mod problem;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use freestar::{FieldMode, GaussianRational, Rational};

use crate::error::{CliError, EXIT_OK, EXIT_USAGE};
use crate::problem::{parse_field, ProblemFile};

#[derive(Debug, Parser)]
#[command(name = "freestar", version, about = "Exact computations in the free *-algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Options {
    /// Truncation or construction degree; overrides the problem file.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Coefficient field: Q or Qi.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Problem file (JSON).
    #[arg(long, global = true)]
    pub problem: Option<PathBuf>,
    /// Emit JSON (the only output format).
    #[arg(long, global = true)]
    pub json: bool,
    /// Polynomial argument; may be repeated.
    #[arg(long = "poly", global = true)]
    pub polys: Vec<String>,
    /// Deformation parameter of the q-system.
    #[arg(long, global = true)]
    pub q: Option<String>,
    /// Rewriting quotient for `canon`.
    #[arg(long, global = true, value_enum)]
    pub algebra: Option<Algebra>,
    /// Name of a matrix tuple in the problem file; may be repeated.
    #[arg(long = "tuple", global = true)]
    pub tuples: Vec<String>,
    /// Name of a vector in the problem file.
    #[arg(long, global = true)]
    pub vector: Option<String>,
    /// How the functional's constants are searched.
    #[arg(long, global = true, value_enum)]
    pub policy: Option<Policy>,
    /// Values of k for `qweyl-identities`; may be repeated.
    #[arg(long = "k", global = true)]
    pub ks: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Toeplitz,
    Qweyl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    Geometric,
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Truncated reduced Gröbner basis of the *-ideal.
    Gb,
    /// Normal forms of the given polynomials.
    Reduce,
    /// Membership verdicts for the given polynomials.
    Member,
    /// Standard monomials up to the given degree.
    StandardMonomials,
    /// Finite codimension verdict and quotient dimension.
    Codim,
    /// Whether the basis splits into analytic and antianalytic parts.
    SplitCheck,
    /// Positive moment functional and its moment matrix.
    Functional,
    /// Exact certificate for the moment functional.
    VerifyFunctional,
    /// Finite matrix witness for the ideal.
    Witness,
    /// Checks a witness against probe polynomials.
    VerifyWitness,
    /// Contractive family of scaled witnesses.
    BoundedFamily,
    /// Evaluates polynomials at a matrix tuple.
    Eval,
    /// Hard, soft-only or nonzero at a matrix tuple.
    ZeroClass,
    /// Polynomials vanishing at matrix tuples.
    VanishingIdeal,
    /// Polynomials killing a vector under a matrix tuple.
    LeftVanishingIdeal,
    /// Commutant dimension and type of a matrix tuple.
    Commutant,
    /// Soft-zero conditions on a sample of irreducible tuples.
    SoftCheck,
    /// Left regular representation of a finite-dimensional quotient.
    Regrep,
    /// Largest two-sided ideal inside a left ideal.
    ZIdeal,
    /// Singular-multiplier membership in a finite quotient.
    HatMember,
    /// Canonical forms in the Toeplitz or q-deformed quotient.
    Canon,
    /// Power identities of the q-deformed system.
    QweylIdentities,
    /// Trace normal form and the trace obstruction.
    TraceForm,
}

impl Command {
    pub fn name(self) -> String {
        let debug = format!("{self:?}");
        let mut out = String::new();
        for (k, c) in debug.chars().enumerate() {
            if c.is_ascii_uppercase() {
                if k > 0 {
                    out.push('-');
                }
                out.push(c.to_ascii_lowercase());
            } else {
                out.push(c);
            }
        }
        out
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((value, code)) => Outcome {
            stdout: pretty(&value),
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: pretty(&render::error(e.kind(), &e.to_string())),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

/// Indented JSON in which arrays of scalars stay on one line.
pub fn pretty(v: &serde_json::Value) -> String {
    let mut s = String::new();
    write_value(&mut s, v, 0);
    s.push('\n');
    s
}

fn write_value(out: &mut String, v: &serde_json::Value, indent: usize) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push('[');
            for (k, x) in items.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn execute(cli: &Cli) -> Result<(serde_json::Value, i32), CliError> {
    let file = cli.opts.problem.as_deref().map(ProblemFile::load).transpose()?;
    let field = match &cli.opts.field {
        Some(f) => parse_field(f)?,
        None => file
            .as_ref()
            .map(ProblemFile::field)
            .transpose()?
            .flatten()
            .unwrap_or(FieldMode::Rational),
    };
    match field {
        FieldMode::Rational => commands::dispatch::<Rational>(cli.command, &cli.opts, file.as_ref()),
        FieldMode::GaussianRational => {
            commands::dispatch::<GaussianRational>(cli.command, &cli.opts, file.as_ref())
        }
    }
}
