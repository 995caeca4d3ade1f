//! Command-line front end: one subcommand per module, JSON in and out.
//!
//! Every subcommand reads a JSON object. An optional `"op"` field selects a
//! secondary operation of the same module; without it the subcommand runs its
//! main operation.

mod commands;
mod payload;

use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use commands::DEFAULT_LEVELS;

#[derive(Parser, Debug)]
#[command(name = "torus-af", version, about = "Complex tori, continued fractions and Effros-Shen algebras")]
struct Cli {
    /// Read the JSON payload from this file instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a modulus to the fundamental domain (lattice operations).
    Reduce,
    /// Expand a number as a continued fraction (arithmetic and CF operations).
    Cf {
        #[arg(long, value_name = "N")]
        max_terms: Option<usize>,
    },
    /// Decide whether two numbers are related by an integer Möbius map.
    Equiv,
    /// Apply the functor to pseudo-lattices, foliations and basis changes.
    Functor,
    /// Build and export a Bratteli diagram; dimension groups.
    Bratteli {
        #[arg(long, value_name = "N")]
        levels: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the whole chain from a marked torus to a Bratteli diagram.
    Pipeline {
        #[arg(long, value_name = "N")]
        levels: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Dot,
    Json,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Parse(String),
    Domain(torus_af::Error),
}

impl From<torus_af::Error> for CliError {
    fn from(e: torus_af::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Parse(m) => f.write_str(m),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage_error",
            CliError::Parse(_) => "parse_error",
            CliError::Domain(e) => e.code(),
        }
    }
}

/// Runs one invocation. `argv[0]` is the program name; `stdin` is only read
/// when no `--input` file is given.
pub fn run<S: AsRef<str>>(argv: &[S], stdin: &str) -> Outcome {
    let cli = match Cli::try_parse_from(argv.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => failure(&CliError::Usage(first_line(&text))),
            };
        }
    };
    let input = match &cli.input {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => return failure(&CliError::Usage(format!("cannot read {}: {e}", path.display()))),
        },
        None => stdin.to_owned(),
    };
    match dispatch(&cli.command, &input) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => failure(&e),
    }
}

fn first_line(s: &str) -> String {
    s.lines().next().unwrap_or_default().trim_start_matches("error: ").to_owned()
}

fn failure(e: &CliError) -> Outcome {
    let body = json!({ "error": { "code": e.code(), "message": e.to_string() } });
    Outcome { code: e.exit_code(), stdout: render(&body), stderr: format!("error: {e}\n") }
}

pub(crate) fn render(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn dispatch(command: &Command, input: &str) -> Result<String, CliError> {
    let payload: serde_json::Value = serde_json::from_str(input)?;
    let mut payload = match payload {
        serde_json::Value::Object(map) => map,
        _ => return Err(CliError::Parse("payload must be a JSON object".into())),
    };
    let op = match payload.remove("op") {
        None => None,
        Some(serde_json::Value::String(s)) => Some(s),
        Some(_) => return Err(CliError::Parse("\"op\" must be a string".into())),
    };
    let op = op.as_deref();
    match command {
        Command::Reduce => commands::reduce(op, payload).map(|v| render(&v)),
        Command::Cf { max_terms } => commands::cf(op, payload, *max_terms).map(|v| render(&v)),
        Command::Equiv => commands::equiv(op, payload).map(|v| render(&v)),
        Command::Functor => commands::functor(op, payload).map(|v| render(&v)),
        Command::Bratteli { levels, format } => commands::bratteli(op, payload, *levels, *format == Format::Dot),
        Command::Pipeline { levels } => commands::pipeline(op, payload, *levels).map(|v| render(&v)),
    }
}
