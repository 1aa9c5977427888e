mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use syzlift::battery::{verify_curve, Battery};
use syzlift::curve::{ParamCurve, DEFAULT_SEED};
use syzlift::report::AnalysisReport;
use syzlift::scroll::{lift, lift_in_chart, Chart};
use syzlift::Error;

/// μ-bases, splitting types, implicit equations and scroll lifts of rational
/// plane curves, in exact arithmetic.
#[derive(Parser)]
#[command(name = "syzlift", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized map-degree test and battery centers.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Splitting type, μ-basis, map degree and second-level invariants.
    Analyze { file: PathBuf },
    /// Analysis plus the implicit equation F and the map degree r.
    Implicitize { file: PathBuf },
    /// Analysis plus the lifted curve on its rational normal scroll.
    Lift {
        file: PathBuf,
        /// Force the chart (a, b) used to write the lift.
        #[arg(long, value_parser = parse_chart)]
        chart: Option<Chart>,
    },
    /// Runs the invariant suite on one curve.
    Verify { file: PathBuf },
    /// Runs the acceptance battery over the fixture corpus.
    Battery,
}

fn parse_chart(s: &str) -> Result<Chart, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Domain(Error),
    Parse(String),
    /// Checks ran but some did not pass; the report is already printed.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Parse(msg)) => {
            eprintln!("error: ParseError: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<ParamCurve, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(input::parse_curve(&text)?)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit_json(value: &impl Serialize) {
    emit(&(serde_json::to_string_pretty(value).expect("reports serialize") + "\n"));
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let seed = cli.seed;
    match &cli.command {
        Command::Analyze { file } => {
            let c = load(file)?;
            let report = AnalysisReport::analyze(&c, seed)?;
            if cli.json {
                emit_json(&report);
            } else {
                emit(&render::analysis(&report));
            }
        }
        Command::Implicitize { file } => {
            let c = load(file)?;
            let report = AnalysisReport::analyze(&c, seed)?.with_implicit(&c, seed)?;
            if cli.json {
                emit_json(&report);
            } else {
                emit(&render::analysis(&report));
            }
        }
        Command::Lift { file, chart } => {
            let c = load(file)?;
            let l = match chart {
                Some(chart) => lift_in_chart(&c, *chart)?,
                None => lift(&c)?,
            };
            let report = AnalysisReport::analyze(&c, seed)?.with_lift(&c, &l)?;
            if cli.json {
                emit_json(&report);
            } else {
                emit(&render::analysis(&report));
            }
        }
        Command::Verify { file } => {
            let c = load(file)?;
            let checks = verify_curve(&c, seed)?;
            if cli.json {
                emit_json(&checks);
            } else {
                emit(&checks.iter().map(|c| format!("{c}\n")).collect::<String>());
            }
            if checks.iter().any(|c| !c.passed) {
                return Err(Failure::Checks);
            }
        }
        Command::Battery => {
            let outcomes = Battery::new(seed).run_all();
            if cli.json {
                emit_json(&outcomes);
            } else {
                let mut text: String = outcomes.iter().map(|o| format!("{o}\n")).collect();
                let passed = outcomes.iter().filter(|o| o.passed).count();
                text += &format!("{passed}/{} criteria passed\n", outcomes.len());
                emit(&text);
            }
            if outcomes.iter().any(|o| !o.passed) {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}
