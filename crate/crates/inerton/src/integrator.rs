//! Numerical oracle: fixed-step classical Runge–Kutta integration of the
//! coupled system, and sample-by-sample comparison against any other
//! series on the same grid.

use crate::config::SimulationConfig;
use crate::error::{Error, Result};
use crate::schedule::{emission_schedule, EmissionEvent};
use crate::series::{Provenance, SystemState, TimeSeries};

/// Componentwise deviation between two series on one grid.
///
/// Relative errors are taken against the per-component maximum magnitude
/// over the series, never against pointwise values.
#[derive(Debug, Clone)]
pub struct ErrorReport {
    /// Max |a − b| per component, ordered (X, Ẋ, x⊥, ẋ⊥, x∥).
    pub max_abs_error: [f64; 5],
    /// Max |a − b| / max|a| per component; 0 where the component is
    /// identically zero.
    pub max_rel_error: [f64; 5],
    /// Max over samples of |Ẋ + (π/T_l)(v0l/c)·x⊥ − v0l| / v0l on the
    /// second series.
    pub first_integral_drift: f64,
    pub step_count: usize,
    pub provenance: (Provenance, Provenance),
}

/// Time derivative of the state under the reduced equations of motion:
/// Ẍ = −(π/T_l)(v0l/c)·ẋ⊥, ẍ⊥ = (π/T_l)(c/v0l)·(Ẋ − v0l), ẍ∥ = 0.
pub fn rhs(ev: &EmissionEvent, state: &SystemState) -> [f64; 5] {
    let omega = ev.omega();
    [
        state.xdot,
        -omega * (ev.v0l / ev.c) * state.xdot_perp,
        state.xdot_perp,
        omega * (ev.c / ev.v0l) * (state.xdot - ev.v0l),
        0.0,
    ]
}

fn advance(state: &SystemState, k: &[f64; 5], h: f64) -> SystemState {
    SystemState {
        x: state.x + h * k[0],
        xdot: state.xdot + h * k[1],
        x_perp: state.x_perp + h * k[2],
        xdot_perp: state.xdot_perp + h * k[3],
        x_par: state.x_par + h * k[4],
    }
}

/// Integrate slot `l` from the emission-time initial conditions
/// (X=0, Ẋ=v0l, x⊥=0, ẋ⊥=c, x∥=0) with classical 4th-order
/// fixed-step Runge–Kutta.
///
/// The oracle covers a single half-period: `t_end` must lie in (0, T_l].
/// Identical inputs give bit-identical outputs.
pub fn integrate(
    config: &SimulationConfig,
    l: u32,
    t_end: f64,
    steps: u32,
) -> Result<TimeSeries> {
    let ev = emission_schedule(config, l)?;
    if steps < 2 {
        return Err(Error::InvalidConfig(format!(
            "integration needs at least 2 steps, got {steps}"
        )));
    }
    if !(t_end > 0.0) || t_end > ev.half_period {
        return Err(Error::TimeOutOfRange {
            t: t_end,
            t_max: ev.half_period,
        });
    }
    let h = t_end / steps as f64;
    let mut state = SystemState {
        x: 0.0,
        xdot: ev.v0l,
        x_perp: 0.0,
        xdot_perp: ev.c,
        x_par: 0.0,
    };
    let mut samples = Vec::with_capacity(steps as usize + 1);
    samples.push((0.0, state));
    for step in 0..steps {
        let k1 = rhs(&ev, &state);
        let k2 = rhs(&ev, &advance(&state, &k1, h / 2.0));
        let k3 = rhs(&ev, &advance(&state, &k2, h / 2.0));
        let k4 = rhs(&ev, &advance(&state, &k3, h));
        let combined = [
            (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]) / 6.0,
            (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]) / 6.0,
            (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]) / 6.0,
            (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]) / 6.0,
            (k1[4] + 2.0 * k2[4] + 2.0 * k3[4] + k4[4]) / 6.0,
        ];
        state = advance(&state, &combined, h);
        if !state.is_finite() {
            return Err(Error::NonFinite {
                step: step as usize,
            });
        }
        samples.push(((step + 1) as f64 * h, state));
    }
    Ok(TimeSeries {
        provenance: Provenance::Integrated,
        samples,
        event: ev,
        config: config.clone(),
    })
}

/// Compare two series sampled on the same grid with the same emission
/// event.
pub fn compare_series(a: &TimeSeries, b: &TimeSeries) -> Result<ErrorReport> {
    if a.len() != b.len() {
        return Err(Error::GridMismatch(format!(
            "sample counts differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if a.event != b.event {
        return Err(Error::GridMismatch(
            "series were produced from different emission events".to_string(),
        ));
    }
    let time_scale = a
        .samples
        .last()
        .map(|(t, _)| t.abs())
        .unwrap_or(0.0)
        .max(f64::MIN_POSITIVE);
    for ((ta, _), (tb, _)) in a.samples.iter().zip(&b.samples) {
        if (ta - tb).abs() > 1e-12 * time_scale {
            return Err(Error::GridMismatch(format!(
                "sample times differ: {ta} vs {tb}"
            )));
        }
    }

    let mut max_abs = [0.0f64; 5];
    let mut max_mag = [0.0f64; 5];
    for ((_, sa), (_, sb)) in a.samples.iter().zip(&b.samples) {
        let ca = sa.components();
        let cb = sb.components();
        for i in 0..5 {
            max_abs[i] = max_abs[i].max((ca[i] - cb[i]).abs());
            max_mag[i] = max_mag[i].max(ca[i].abs()).max(cb[i].abs());
        }
    }
    let mut max_rel = [0.0f64; 5];
    for i in 0..5 {
        max_rel[i] = if max_mag[i] > 0.0 {
            max_abs[i] / max_mag[i]
        } else {
            0.0
        };
    }

    let ev = &b.event;
    let coeff = ev.omega() * ev.v0l / ev.c;
    let drift = b
        .samples
        .iter()
        .map(|(_, s)| ((s.xdot + coeff * s.x_perp - ev.v0l) / ev.v0l).abs())
        .fold(0.0f64, f64::max);

    Ok(ErrorReport {
        max_abs_error: max_abs,
        max_rel_error: max_rel,
        first_integral_drift: drift,
        step_count: a.len().saturating_sub(1),
        provenance: (a.provenance, b.provenance),
    })
}
