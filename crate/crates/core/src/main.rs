use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use circle_intercept::scenario::{
    curves_table, path_table, solve_report, times_table, CliError, ScenarioFile,
};

#[derive(Parser)]
#[command(version, about = "Curvature-constrained interception of a target moving on a circle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Scenario file (TOML).
    #[arg(long)]
    scenario: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Overrides the scenario's convergence tolerance, in seconds.
    #[arg(long)]
    epsilon: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for the interception point and write a report.
    Solve {
        #[command(flatten)]
        common: Common,
    },
    /// Per-mode CSC lengths against angular position.
    Curves {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        grid: usize,
    },
    /// Pursuer and target travel times against the travel parameter.
    Times {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        grid: usize,
        #[arg(long, default_value_t = 4.0 * std::f64::consts::PI)]
        beta_max: f64,
    },
    /// Samples of the interception path and of the target.
    Path {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

fn load(common: &Common) -> Result<ScenarioFile, CliError> {
    let text = fs::read_to_string(&common.scenario).map_err(|e| {
        CliError::Parse(format!("cannot read {}: {e}", common.scenario.display()))
    })?;
    let mut file = ScenarioFile::parse(&text)?;
    if let Some(eps) = common.epsilon {
        file.epsilon = Some(eps);
    }
    Ok(file)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { common } => {
            let file = load(&common)?;
            let (report, _) = solve_report(&file)?;
            emit(common.out.as_deref(), &report.to_toml())?;
            if let Some(why) = report.verification.failure {
                return Err(CliError::Verification(why));
            }
        }
        Command::Curves { common, grid } => {
            let scenario = load(&common)?.to_scenario()?;
            emit(common.out.as_deref(), &curves_table(&scenario, grid)?)?;
        }
        Command::Times { common, grid, beta_max } => {
            let scenario = load(&common)?.to_scenario()?;
            emit(common.out.as_deref(), &times_table(&scenario, beta_max, grid)?)?;
        }
        Command::Path { common, samples } => {
            let scenario = load(&common)?.to_scenario()?;
            emit(common.out.as_deref(), &path_table(&scenario, samples)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
