//! Verification suite: runs the internal consistency checks for one
//! configuration and renders a machine-readable pass/fail report.

use crate::analytic;
use crate::config::SimulationConfig;
use crate::error::Result;
use crate::integrator;
use crate::observables;
use crate::schedule::emission_schedule;
use crate::wavemech::{self, OscillatorParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Info => write!(f, "info"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    /// (key, value) detail lines; for pass/fail checks these include
    /// `measured` and `tolerance`.
    pub values: Vec<(&'static str, f64)>,
}

impl CheckResult {
    fn gated(name: &'static str, measured: f64, tolerance: f64) -> Self {
        CheckResult {
            name,
            status: if measured <= tolerance {
                Status::Pass
            } else {
                Status::Fail
            },
            values: vec![("measured", measured), ("tolerance", tolerance)],
        }
    }
}

/// Oracle-equivalence tolerance tier for a given step count: 1e−7 at
/// 10⁴ steps and above, 1e−3 down to 10² steps, 0.5 below.
pub fn oracle_tolerance(steps: u32) -> f64 {
    if steps >= 10_000 {
        1e-7
    } else if steps >= 100 {
        1e-3
    } else {
        0.5
    }
}

/// Run every check for slot 0 of `config`. Results come back ordered by
/// check name.
pub fn run_checks(config: &SimulationConfig) -> Result<Vec<CheckResult>> {
    config.validate()?;
    let ev = emission_schedule(config, 0)?;
    let steps = config.steps_per_period;
    let mut checks = Vec::new();

    // action identities: J·ν = E and J = p0·λ_mech
    {
        let report = observables::report(config)?;
        let d1 = (report.action * report.frequency - report.energy).abs() / report.energy;
        let d2 = (report.action - report.momentum * report.lambda_mech).abs() / report.action;
        checks.push(CheckResult::gated("action_consistency", d1.max(d2), 1e-12));
    }

    // Λ/λ = c/v0
    {
        let report = observables::report(config)?;
        let measured =
            (report.amplitude / report.lambda - report.ratio_c_over_v0).abs() / report.ratio_c_over_v0;
        checks.push(CheckResult::gated("amplitude_ratio", measured, 1e-12));
    }

    // step-halving error reduction, fixed 250/500/1000 grid
    {
        let err_at = |steps: u32| -> Result<f64> {
            let integrated = integrator::integrate(config, 0, ev.half_period, steps)?;
            let reference = analytic::trajectory_series(config, 0, 1, steps)?;
            let report = integrator::compare_series(&reference, &integrated)?;
            Ok(report.max_abs_error.iter().fold(0.0f64, |a, e| a.max(*e)))
        };
        let e1 = err_at(250)?;
        let e2 = err_at(500)?;
        let e3 = err_at(1000)?;
        let r1 = e1 / e2;
        let r2 = e2 / e3;
        let in_band = |r: f64| (12.0..=20.0).contains(&r);
        checks.push(CheckResult {
            name: "convergence_order",
            status: if in_band(r1) && in_band(r2) {
                Status::Pass
            } else {
                Status::Fail
            },
            values: vec![("ratio_level_1", r1), ("ratio_level_2", r2), ("nominal", 16.0)],
        });
    }

    // both closed-form displacement values over one half-period; the
    // two printed forms disagree, so this entry is informational only
    checks.push(CheckResult {
        name: "displacement_forms",
        status: Status::Info,
        values: vec![
            ("x_end_closed_form", analytic::displacement_per_period(&ev)),
            (
                "x_end_drift_form",
                analytic::displacement_per_period_drift_form(&ev),
            ),
        ],
    });

    // conservation of Ẋ + (π/T_l)(v0l/c)x⊥ along the integrated orbit
    {
        let integrated = integrator::integrate(config, 0, ev.half_period, steps)?;
        let report = integrator::compare_series(&integrated, &integrated)?;
        checks.push(CheckResult::gated(
            "first_integral",
            report.first_integral_drift,
            1e-9,
        ));
    }

    // Hamilton–Jacobi residual over |X| ≤ 0.9·amplitude
    {
        let params = OscillatorParams::from_config(config);
        let mut worst = 0.0f64;
        for i in -18..=18 {
            let x = params.amplitude * i as f64 / 20.0;
            worst = worst.max(wavemech::hj_residual(x, &params)?.abs());
        }
        checks.push(CheckResult::gated(
            "hj_residual",
            worst / params.energy,
            1e-6,
        ));
    }

    // numerical oracle vs closed form on the configured grid
    {
        let integrated = integrator::integrate(config, 0, ev.half_period, steps)?;
        let reference = analytic::trajectory_series(config, 0, 1, steps)?;
        let report = integrator::compare_series(&reference, &integrated)?;
        let measured = report
            .max_rel_error
            .iter()
            .take(4)
            .fold(0.0f64, |a, e| a.max(*e));
        checks.push(CheckResult::gated(
            "oracle_equivalence",
            measured,
            oracle_tolerance(steps),
        ));
    }

    // transverse maximum Λ_l/π at mid-period
    {
        let peak = analytic::inerton_perp_position(&ev, ev.half_period / 2.0)?;
        let expected = ev.amplitude / std::f64::consts::PI;
        checks.push(CheckResult::gated(
            "perp_maximum",
            (peak - expected).abs() / expected,
            1e-9,
        ));
    }

    // Ẋ(0) = Ẋ(T_l) = v0l and Ẋ(T_l/2) = 0
    {
        let v_start = analytic::particle_velocity(&ev, 0.0)?;
        let v_mid = analytic::particle_velocity(&ev, ev.half_period / 2.0)?;
        let v_end = analytic::particle_velocity(&ev, ev.half_period)?;
        let measured = ((v_start - ev.v0l).abs() / ev.v0l)
            .max(v_mid.abs() / ev.v0l)
            .max((v_end - ev.v0l).abs() / ev.v0l);
        checks.push(CheckResult::gated("velocity_periodicity", measured, 1e-12));
    }

    // plane-wave residual: zero when consistent, large when perturbed
    {
        let residual = wavemech::wave_equation_residual(0.3, 0.7, config);
        checks.push(CheckResult::gated("wave_residual", residual, 1e-12));
        let perturbed = wavemech::wave_equation_residual_scaled(0.3, 0.7, config, 1.1);
        checks.push(CheckResult {
            name: "wave_residual_power",
            status: if perturbed > 0.2 {
                Status::Pass
            } else {
                Status::Fail
            },
            values: vec![("measured", perturbed), ("threshold", 0.2)],
        });
    }

    checks.sort_by(|a, b| a.name.cmp(b.name));
    Ok(checks)
}

/// Render the check list as flat key=value text.
pub fn render_report(checks: &[CheckResult]) -> String {
    let mut out = String::new();
    for check in checks {
        out.push_str(&format!("{}.status = {}\n", check.name, check.status));
        for (key, value) in &check.values {
            out.push_str(&format!(
                "{}.{} = {}\n",
                check.name,
                key,
                crate::numfmt::shortest(*value)
            ));
        }
    }
    out
}

/// True when no check failed (informational entries never fail).
pub fn all_pass(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}
