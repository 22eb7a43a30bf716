use std::process::ExitCode;

use clap::{Parser, Subcommand};

use leibniz_cli::commands::{self, CliError, Input, DEFAULT_SEED};
use leibniz_cli::{Format, Report};
use leibniz_core::cohomology::Theory;

/// Exact checks for Leibniz and Lie algebras given by structure constants.
///
/// INPUT is either a path to an algebra document (JSON) or a catalog id such
/// as `g1n1:n=7` or `R7_g1:n=5,b2=2`.
#[derive(Parser)]
#[command(name = "leibniz", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Leibniz/Lie status, series, nilpotency index, center and annihilator.
    Check { input: String },
    /// Derivation space; catalog nilradicals are compared with their parametric forms.
    Derivations { input: String },
    /// Dimension of H^n (lie) or HL^n (leibniz) with adjoint coefficients.
    Cohomology {
        input: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
        degree: u8,
        #[arg(long, default_value = "leibniz", value_parser = parse_theory)]
        theory: Theory,
    },
    /// Search for a connected gradation of maximum length.
    Grading {
        input: String,
        /// Weight bound for the generators (default 2·dim).
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Certify a nilradical and its complement operators.
    Nilradical {
        input: String,
        /// 1-based basis indices spanning the nilradical (catalog ids supply their own).
        #[arg(long)]
        nilradical: Option<String>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run the classification checks over the catalog.
    Reproduce {
        #[arg(long, value_delimiter = ',', default_value = "5,7,9")]
        n: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random basis changes per instance.
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Print the algebra document for an input.
    Export { input: String },
}

fn parse_theory(s: &str) -> Result<Theory, String> {
    s.parse()
}

fn run(cli: &Cli) -> Result<Option<Report>, CliError> {
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let echo = echo.join(" ");
    Ok(Some(match &cli.command {
        Command::Check { input } => commands::check(&Input::load(input)?, echo),
        Command::Derivations { input } => commands::derivations(&Input::load(input)?, echo),
        Command::Cohomology { input, degree, theory } => {
            commands::cohomology_cmd(&Input::load(input)?, *theory, *degree as usize, echo)?
        }
        Command::Grading { input, bound } => {
            if bound.is_some_and(|b| b < 1) {
                return Err(CliError::Usage("--bound must be at least 1".into()));
            }
            commands::grading(&Input::load(input)?, *bound, echo)
        }
        Command::Nilradical { input, nilradical, trials, seed } => {
            commands::nilradical(&Input::load(input)?, nilradical.as_deref(), *trials, *seed, echo)?
        }
        Command::Reproduce { n, seed, trials } => commands::reproduce(n, *seed, *trials, echo),
        Command::Export { input } => {
            print!("{}", commands::export(&Input::load(input)?));
            return Ok(None);
        }
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Some(report)) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
