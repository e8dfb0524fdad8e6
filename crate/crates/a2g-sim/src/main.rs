//! Command-line driver: parse a config, run one experiment, emit CSV.
//!
//! Exit status: 0 success, 1 configuration/usage error, 2 model or solver
//! error.

use a2g_sim::config::{parse_config, AttenuationMode};
use a2g_sim::report::write_csv;
use a2g_sim::scenario::{run_sweep, Experiment};
use clap::{Parser, ValueEnum};
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExperimentArg {
    F4,
    F5,
    F6,
    Grid,
}

impl From<ExperimentArg> for Experiment {
    fn from(e: ExperimentArg) -> Self {
        match e {
            ExperimentArg::F4 => Experiment::F4,
            ExperimentArg::F5 => Experiment::F5,
            ExperimentArg::F6 => Experiment::F6,
            ExperimentArg::Grid => Experiment::Grid,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Parametric,
    Preset,
    Both,
}

impl From<ModeArg> for AttenuationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Parametric => AttenuationMode::Parametric,
            ModeArg::Preset => AttenuationMode::Preset,
            ModeArg::Both => AttenuationMode::Both,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "a2g-sim", about = "Weather-aware UAV-to-ground link simulator")]
struct Args {
    /// Configuration file (sectioned key = value).
    #[arg(long)]
    config: PathBuf,

    /// Which sweep to run.
    #[arg(long, value_enum, default_value = "grid")]
    experiment: ExperimentArg,

    /// Output CSV path, or `-` for standard output.
    #[arg(long, default_value = "-")]
    out: String,

    /// Override the master seed from the config file.
    #[arg(long)]
    seed: Option<u64>,

    /// Attenuation source: parametric models, table presets, or both.
    #[arg(long, value_enum, default_value = "parametric")]
    mode: ModeArg,
}

fn run(args: &Args) -> Result<(), u8> {
    let text = fs::read_to_string(&args.config).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", args.config.display());
        1
    })?;
    let sim = parse_config(&text).map_err(|e| {
        eprintln!("error: {e}");
        1
    })?;
    let scenario = sim
        .scenario(args.experiment.into(), args.mode.into(), args.seed)
        .map_err(|e| {
            eprintln!("error: {e}");
            1
        })?;
    let rows = run_sweep(&scenario).map_err(|e| {
        eprintln!("error: {e}");
        2
    })?;

    let emit = |sink: &mut dyn Write| write_csv(sink, &rows);
    let result = if args.out == "-" {
        emit(&mut std::io::stdout().lock())
    } else {
        match fs::File::create(&args.out) {
            Ok(mut f) => emit(&mut f),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", args.out);
                return Err(2);
            }
        }
    };
    result.map_err(|e| {
        eprintln!("error: write failed: {e}");
        2
    })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            // clap would exit 2 on its own; usage problems are exit 1 here
            let _ = e.print();
            return ExitCode::from(if e.exit_code() == 0 { 0 } else { 1 });
        }
    };
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
