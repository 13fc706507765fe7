use clap::{Parser, Subcommand, ValueEnum};
use qga_cli::{
    bell_curve_csv, cmd_decompose, cmd_observables, cmd_overlap, parse_inline_amplitudes,
    parse_state_spec, CliError, Report, StateSpec,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Geometric-algebra engine for one- and two-qubit pure states.
#[derive(Parser)]
#[command(name = "qga", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Schmidt-decompose a two-qubit state into its canonical parameters
    Decompose {
        /// Path to a JSON state document
        state: Option<PathBuf>,
        /// Inline amplitudes: 8 comma-separated reals (re,im per amplitude)
        #[arg(long)]
        amps: Option<String>,
        /// Renormalize the input before use
        #[arg(long)]
        normalize: bool,
        /// Append residuals against the matrix oracle
        #[arg(long)]
        xcheck: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Report the multivector observables, reduced polarizations and
    /// density-matrix coefficients of a normalized state
    Observables {
        state: Option<PathBuf>,
        #[arg(long)]
        amps: Option<String>,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        xcheck: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Measurement-overlap probability of two normalized states
    Overlap {
        state_a: Option<PathBuf>,
        state_b: Option<PathBuf>,
        /// Inline amplitudes for the first state
        #[arg(long)]
        amps_a: Option<String>,
        /// Inline amplitudes for the second state
        #[arg(long)]
        amps_b: Option<String>,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        xcheck: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Singlet joint-measurement curve over apparatus angles in [0, pi], as CSV
    BellCurve {
        /// Number of rows; the angles span [0, pi] uniformly
        #[arg(long)]
        samples: usize,
        /// Append a residual column against the closed form
        #[arg(long)]
        xcheck: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn load_spec(
    label: &str,
    path: Option<&Path>,
    inline: Option<&str>,
) -> Result<StateSpec, CliError> {
    match (path, inline) {
        (Some(_), Some(_)) => Err(CliError::Usage(format!(
            "give {label} either as a file or inline, not both"
        ))),
        (None, None) => Err(CliError::Usage(format!(
            "missing {label}: pass a state file or inline amplitudes"
        ))),
        (Some(p), None) => {
            let text = std::fs::read_to_string(p).map_err(|e| {
                CliError::Domain(format!("cannot read state file {}: {e}", p.display()))
            })?;
            parse_state_spec(&text)
        }
        (None, Some(s)) => parse_inline_amplitudes(s),
    }
}

fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(report.to_text()),
        Format::Structured => Ok(report.to_structured()),
        Format::Csv => Err(CliError::Usage(
            "csv output is only available for bell-curve".into(),
        )),
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Decompose { state, amps, normalize, xcheck, format } => {
            let spec = load_spec("the state", state.as_deref(), amps.as_deref())?;
            render(&cmd_decompose(&spec, normalize, xcheck)?, format)
        }
        Command::Observables { state, amps, normalize, xcheck, format } => {
            let spec = load_spec("the state", state.as_deref(), amps.as_deref())?;
            render(&cmd_observables(&spec, normalize, xcheck)?, format)
        }
        Command::Overlap { state_a, state_b, amps_a, amps_b, normalize, xcheck, format } => {
            let spec_a = load_spec("state A", state_a.as_deref(), amps_a.as_deref())?;
            let spec_b = load_spec("state B", state_b.as_deref(), amps_b.as_deref())?;
            render(&cmd_overlap(&spec_a, &spec_b, normalize, xcheck)?, format)
        }
        Command::BellCurve { samples, xcheck, format } => {
            if format != Format::Csv {
                return Err(CliError::Usage("bell-curve output is always csv".into()));
            }
            bell_curve_csv(samples, xcheck)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
