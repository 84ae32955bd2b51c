use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use fgbeam_cli::benchmark::{self, parse_overrides};
use fgbeam_cli::config::{parse_config, CaseConfig, Station};
use fgbeam_cli::study::{self, SweepParam};

/// Static bending of functionally graded straight and curved sandwich beams.
#[derive(Parser)]
#[command(name = "fgbeam", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one case and print its results as CSV.
    Run {
        config: PathBuf,
    },
    /// Repeat a case over several element counts.
    Converge {
        config: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "2,4,8,12,16,24,32")]
        ne: Vec<usize>,
    },
    /// Repeat a case over values of one parameter.
    Sweep {
        config: PathBuf,
        /// p, R_over_L, scheme or L_over_h
        #[arg(long)]
        param: SweepParam,
        /// Comma-separated values; `inf` is accepted for R_over_L.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        values: Vec<String>,
    },
    /// Compare against the embedded reference tables.
    Bench {
        /// Restrict to tables such as T6,T9.
        #[arg(long, value_delimiter = ',')]
        table: Vec<String>,
        /// Also write the per-cell comparison to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Per-table tolerance override, e.g. T12=0.01 (repeatable).
        #[arg(long = "tol")]
        tolerances: Vec<String>,
        /// Number of worst cells listed in the report.
        #[arg(long, default_value_t = 10)]
        worst: usize,
    },
    /// Through-thickness nondimensional stresses at one station.
    Profile {
        config: PathBuf,
        /// start, mid, end or an arc length in metres.
        #[arg(long, default_value = "mid")]
        x: Station,
        #[arg(long, default_value_t = 201)]
        samples: usize,
    },
}

fn load(path: &Path) -> Result<CaseConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_config(&text).with_context(|| format!("in {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Run { config } => {
            let cfg = load(&config)?;
            let report = study::run_case(&cfg)?;
            print!("{}", report.to_csv(&cfg));
            if let Some(profile) = report.profile {
                print!("\n{profile}");
            }
        }
        Command::Converge { config, ne } => {
            let table = study::convergence_study(&load(&config)?, &ne)?;
            print!("{}", table.to_csv());
            if !table.is_monotone() {
                eprintln!("warning: deflection does not change monotonically with ne");
            }
        }
        Command::Sweep {
            config,
            param,
            values,
        } => print!("{}", study::sweep(&load(&config)?, param, &values)?),
        Command::Bench {
            table,
            csv,
            tolerances,
            worst,
        } => {
            let mut fixtures = benchmark::embedded_fixtures();
            if !table.is_empty() {
                let names: Vec<&str> = table.iter().map(String::as_str).collect();
                fixtures = benchmark::select_tables(&fixtures, &names);
                anyhow::ensure!(!fixtures.is_empty(), "no fixtures for tables {table:?}");
            }
            let report = benchmark::benchmark_compare(&fixtures, &parse_overrides(&tolerances)?)?;
            print!("{}", report.to_text(worst));
            if let Some(path) = csv {
                std::fs::write(&path, report.to_csv())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Profile { config, x, samples } => {
            print!("{}", study::profile_csv(&load(&config)?, x, samples)?)
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
