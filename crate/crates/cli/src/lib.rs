//! Command-line front end: polynomial text syntax, the `divide`, `verify`,
//! `delta` and `sequence` subcommands, and their text/JSON output.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 domain error (zero
//! divisor, input limits, matrix cap), 3 method mismatch.

pub mod commands;
pub mod limits;
pub mod parse;
pub mod render;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use polydiv_core::methods::Method;

use commands::{CliError, Context, DeltaKind, Format, SeqKind, EXIT_MISMATCH, EXIT_OK, EXIT_PARSE};
use limits::Limits;

pub use parse::{parse_polynomial, parse_polynomial_with, InputError, ParseError};
pub use render::render;

/// Debug builds only: name of a method whose quotient `verify` corrupts.
pub const FAULT_ENV: &str = "POLYDIV_FAULT_INJECT";

#[derive(Parser, Debug)]
#[command(name = "polydiv", version, about = "Exact polynomial division by four independent methods")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Divide one polynomial by another.
    Divide {
        #[arg(long, allow_hyphen_values = true)]
        dividend: String,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Longdiv)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Run every method and check they agree exactly.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        dividend: String,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Hessenberg-Toeplitz determinant of order k built from the divisor.
    Delta {
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(short = 'k', value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum)]
        variant: DeltaArg,
    },
    /// First terms of the recurrent sequence attached to the divisor.
    Sequence {
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Longdiv,
    Closed,
    DetFormula,
    DetRatio,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Longdiv => Method::LongDiv,
            MethodArg::Closed => Method::Closed,
            MethodArg::DetFormula => Method::DetFormula,
            MethodArg::DetRatio => Method::DetRatio,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DeltaArg {
    PureDirect,
    PureClosed,
    CorFlipped,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    S,
    T,
}

fn fault_from_env() -> Result<Option<Method>, CliError> {
    if !cfg!(debug_assertions) {
        return Ok(None);
    }
    match std::env::var(FAULT_ENV) {
        Ok(name) => name.parse().map(Some).map_err(CliError::Usage),
        Err(_) => Ok(None),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let ctx = Context {
        limits: Limits::from_env().map_err(CliError::Usage)?,
        fault: fault_from_env()?,
        ..Context::default()
    };
    let text = match command {
        Command::Divide {
            dividend,
            divisor,
            method,
            format,
        } => commands::cmd_divide(&ctx, &dividend, &divisor, method.into(), format.into())?,
        Command::Verify {
            dividend,
            divisor,
            format,
        } => {
            let outcome = commands::cmd_verify(&ctx, &dividend, &divisor)?;
            let _ = out.write_all(outcome.render(format.into()).as_bytes());
            return match outcome.mismatch {
                Some(m) => Err(CliError::Mismatch(m)),
                None => Ok(EXIT_OK),
            };
        }
        Command::Delta { divisor, k, variant } => {
            let kind = match variant {
                DeltaArg::PureDirect => DeltaKind::PureDirect,
                DeltaArg::PureClosed => DeltaKind::PureClosed,
                DeltaArg::CorFlipped => DeltaKind::CorFlipped,
            };
            commands::cmd_delta(&ctx, &divisor, usize::try_from(k).unwrap_or(usize::MAX), kind)?
        }
        Command::Sequence { divisor, kind, n } => {
            let kind = match kind {
                KindArg::S => SeqKind::S,
                KindArg::T => SeqKind::T,
            };
            commands::cmd_sequence(&ctx, &divisor, kind, usize::try_from(n).unwrap_or(usize::MAX))?
        }
    };
    let _ = out.write_all(text.as_bytes());
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let label = match (&e, e.exit_code()) {
                (CliError::Input(_), _) => "",
                (_, EXIT_PARSE) => "usage error: ",
                (_, EXIT_MISMATCH) => "mismatch: ",
                _ => "error: ",
            };
            let _ = writeln!(err, "polydiv: {label}{e}");
            e.exit_code()
        }
    }
}
