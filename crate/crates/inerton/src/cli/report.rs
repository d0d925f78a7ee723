//! Flat key=value rendering of the observables report, with published
//! reference values and discrepancy flags for the electron scenario.

use crate::config::SimulationConfig;
use crate::numfmt::shortest;
use crate::observables::ObservablesReport;

/// Published order-of-magnitude values for the free-electron scenario.
pub const ELECTRON_REFERENCE_LAMBDA_CM: f64 = 6e-5;
pub const ELECTRON_REFERENCE_AMPLITUDE_CM: f64 = 2.0;
pub const ELECTRON_REFERENCE_POPULATION: f64 = 1e22;

/// A computed value agrees with its reference when they are within a
/// factor of 10 of each other; beyond that the flag is `discrepancy`.
pub fn agreement_flag(computed: f64, reference: f64) -> &'static str {
    let ratio = (computed / reference).abs();
    if ratio >= 0.1 && ratio <= 10.0 {
        "ok"
    } else {
        "discrepancy"
    }
}

/// Render the report. `scenario` attaches the published reference values
/// when it names the electron scenario.
pub fn render(
    report: &ObservablesReport,
    config: &SimulationConfig,
    scenario: Option<&str>,
) -> String {
    fn kv(out: &mut String, key: &str, value: f64) {
        out.push_str(&format!("{key} = {}\n", shortest(value)));
    }
    let mut out = String::new();
    if let Some(name) = scenario {
        out.push_str(&format!("scenario = {name}\n"));
    }
    kv(&mut out, "M_g", config.mass);
    kv(&mut out, "v0_cm_per_s", config.v0);
    kv(&mut out, "c_cm_per_s", config.c);
    kv(&mut out, "T_s", config.period);
    kv(&mut out, "R0_cm", config.r0);
    out.push_str(&format!(
        "R0_flag = {}\n",
        if config.r0_defaulted { "defaulted" } else { "given" }
    ));
    kv(&mut out, "lambda_cm", report.lambda);
    kv(&mut out, "lambda_mech_cm", report.lambda_mech);
    kv(&mut out, "Lambda_cm", report.amplitude);
    kv(&mut out, "ratio_c_over_v0", report.ratio_c_over_v0);
    kv(&mut out, "N_estimate", report.population);
    kv(&mut out, "m0_g", report.m0);
    kv(&mut out, "E_erg", report.energy);
    kv(&mut out, "nu_per_s", report.frequency);
    kv(&mut out, "p0_g_cm_per_s", report.momentum);
    kv(&mut out, "J_erg_s", report.action);
    kv(&mut out, "J_over_h", report.action_over_h);
    if scenario == Some("electron") {
        kv(&mut out, "reference_lambda_cm", ELECTRON_REFERENCE_LAMBDA_CM);
        out.push_str(&format!(
            "lambda_flag = {}\n",
            agreement_flag(report.lambda, ELECTRON_REFERENCE_LAMBDA_CM)
        ));
        kv(&mut out, "reference_Lambda_cm", ELECTRON_REFERENCE_AMPLITUDE_CM);
        out.push_str(&format!(
            "Lambda_flag = {}\n",
            agreement_flag(report.amplitude, ELECTRON_REFERENCE_AMPLITUDE_CM)
        ));
        kv(&mut out, "reference_N_estimate", ELECTRON_REFERENCE_POPULATION);
        out.push_str(&format!(
            "N_flag = {}\n",
            agreement_flag(report.population, ELECTRON_REFERENCE_POPULATION)
        ));
    }
    out
}
