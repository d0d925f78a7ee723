//! Command-line front end: `simulate`, `verify`, `observables` and
//! `figure5` subcommands with deterministic file outputs.
//!
//! Exit codes are stable: 0 success, 1 validation or verification
//! failure, 2 I/O or parse failure.

pub mod csv;
pub mod manifest;
pub mod report;
pub mod svg;
pub mod verify;

use crate::analytic;
use crate::config::SimulationConfig;
use crate::error::{Error, Result};
use crate::integrator;
use crate::observables;

use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "inerton", version, about = "Deterministic particle/excitation dynamics simulator")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample a trajectory and emit CSV plus a run manifest
    Simulate {
        /// Config file (flat key = value)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Built-in scenario name (unit, electron)
        #[arg(long)]
        scenario: Option<String>,
        /// Emission slot index
        #[arg(long, default_value_t = 0)]
        l: u32,
        /// Number of oscillations to stitch
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        /// Samples per half-period
        #[arg(long)]
        samples: Option<u32>,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
        /// Emit the numerically integrated series instead of the
        /// closed-form one (single oscillation only)
        #[arg(long)]
        integrated: bool,
    },
    /// Run the consistency checks and emit a pass/fail report
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        scenario: Option<String>,
        /// Optional output directory for the report file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit derived scalar observables as flat key=value text
    Observables {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the dimensionless staircase trajectory as CSV and SVG
    Figure5 {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        scenario: Option<String>,
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        #[arg(long)]
        samples: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn resolve_config(
    config: &Option<PathBuf>,
    scenario: &Option<String>,
) -> Result<(SimulationConfig, Option<String>)> {
    match (config, scenario) {
        (Some(path), _) => Ok((SimulationConfig::load(path)?, None)),
        (None, Some(name)) => Ok((SimulationConfig::scenario(name)?, Some(name.clone()))),
        (None, None) => Ok((SimulationConfig::unit(), Some("unit".to_string()))),
    }
}

fn write_outputs(dir: &Path, files: &[(String, String)]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, content) in files {
        std::fs::write(dir.join(name), content)?;
    }
    Ok(())
}

fn emit_with_manifest(
    dir: &Path,
    command: &str,
    config: &SimulationConfig,
    mut files: Vec<(String, String)>,
) -> Result<()> {
    let digest_inputs: Vec<(String, &[u8])> = files
        .iter()
        .map(|(name, content)| (name.clone(), content.as_bytes()))
        .collect();
    let manifest_text = manifest::build(command, config, &digest_inputs);
    files.push(("manifest.txt".to_string(), manifest_text));
    write_outputs(dir, &files)
}

fn cmd_simulate(
    config: &SimulationConfig,
    l: u32,
    n_max: u32,
    samples: u32,
    out: &Path,
    integrated: bool,
) -> Result<()> {
    config.validate()?;
    let series = if integrated {
        if n_max != 1 {
            return Err(Error::InvalidConfig(
                "the integrated series covers a single oscillation; use --n-max 1".to_string(),
            ));
        }
        let ev = crate::schedule::emission_schedule(config, l)?;
        integrator::integrate(config, l, ev.half_period, samples)?
    } else {
        analytic::trajectory_series(config, l, n_max, samples)?
    };
    let files = vec![("trajectory.csv".to_string(), csv::to_csv(&series))];
    emit_with_manifest(out, "simulate", config, files)
}

fn cmd_verify(config: &SimulationConfig, out: Option<&Path>) -> Result<bool> {
    let checks = verify::run_checks(config)?;
    let text = verify::render_report(&checks);
    print!("{text}");
    if let Some(dir) = out {
        emit_with_manifest(dir, "verify", config, vec![("verify.txt".to_string(), text)])?;
    }
    Ok(verify::all_pass(&checks))
}

fn cmd_observables(
    config: &SimulationConfig,
    scenario: Option<&str>,
    out: Option<&Path>,
) -> Result<()> {
    let rep = observables::report(config)?;
    let text = report::render(&rep, config, scenario);
    print!("{text}");
    if let Some(dir) = out {
        emit_with_manifest(
            dir,
            "observables",
            config,
            vec![("observables.txt".to_string(), text)],
        )?;
    }
    Ok(())
}

fn cmd_figure5(config: &SimulationConfig, n_max: u32, samples: u32, out: &Path) -> Result<()> {
    let series = analytic::trajectory_series(config, 0, n_max, samples)?;
    let ev = &series.event;
    let pi = std::f64::consts::PI;
    let points: Vec<(f64, f64)> = series
        .samples
        .iter()
        .map(|(t, state)| (pi * t / ev.half_period, pi * state.x / ev.lambda))
        .collect();
    let mut csv_text = String::from("pi_t_over_T,pi_X_over_lambda\n");
    for (x, y) in &points {
        csv_text.push_str(&format!(
            "{},{}\n",
            crate::numfmt::shortest(*x),
            crate::numfmt::shortest(*y)
        ));
    }
    let svg_text = svg::line_plot(
        &points,
        "pi t / T",
        "pi X / lambda",
        "Staircase trajectory (dimensionless)",
    );
    emit_with_manifest(
        out,
        "figure5",
        config,
        vec![
            ("figure5.csv".to_string(), csv_text),
            ("figure5.svg".to_string(), svg_text),
        ],
    )
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // help/version requests are successes, anything else is a
            // usage/parse failure
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Simulate {
            config,
            scenario,
            l,
            n_max,
            samples,
            out,
            integrated,
        } => {
            let (config, _) = resolve_config(&config, &scenario)?;
            let n_max = n_max.unwrap_or(config.n_oscillations);
            let samples = samples.unwrap_or(config.steps_per_period);
            cmd_simulate(&config, l, n_max, samples, &out, integrated)?;
            Ok(true)
        }
        Command::Verify {
            config,
            scenario,
            out,
        } => {
            let (config, _) = resolve_config(&config, &scenario)?;
            cmd_verify(&config, out.as_deref())
        }
        Command::Observables {
            config,
            scenario,
            out,
        } => {
            let (config, scenario_name) = resolve_config(&config, &scenario)?;
            cmd_observables(&config, scenario_name.as_deref(), out.as_deref())?;
            Ok(true)
        }
        Command::Figure5 {
            config,
            scenario,
            n_max,
            samples,
            out,
        } => {
            let (config, _) = resolve_config(&config, &scenario)?;
            let n_max = n_max.unwrap_or(config.n_oscillations);
            let samples = samples.unwrap_or(256);
            cmd_figure5(&config, n_max, samples, &out)?;
            Ok(true)
        }
    }
}
