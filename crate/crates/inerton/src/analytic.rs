//! Closed-form solutions of the coupled particle–excitation system over a
//! single half-period, the quasicyclic time relabeling that extends them
//! to later oscillations, and the windowed longitudinal drift.

use crate::config::SimulationConfig;
use crate::error::{Error, Result};
use crate::schedule::{emission_schedule, EmissionEvent};
use crate::series::{Provenance, SystemState, TimeSeries};

use std::f64::consts::PI;

fn check_interval(ev: &EmissionEvent, t: f64) -> Result<()> {
    if t < 0.0 || t > ev.half_period || !t.is_finite() {
        return Err(Error::TimeOutOfRange {
            t,
            t_max: ev.half_period,
        });
    }
    Ok(())
}

/// Transverse excitation coordinate (Λ_l/π)·sin(π t_l/T_l) [cm].
///
/// Valid only for 0 ≤ t_l ≤ T_l; later oscillations go through
/// [`quasicyclic_time`] first.
pub fn inerton_perp_position(ev: &EmissionEvent, t_l: f64) -> Result<f64> {
    check_interval(ev, t_l)?;
    Ok(ev.amplitude / PI * (PI * t_l / ev.half_period).sin())
}

/// Transverse excitation velocity c·cos(π t_l/T_l) [cm/s].
pub fn inerton_perp_velocity(ev: &EmissionEvent, t_l: f64) -> Result<f64> {
    check_interval(ev, t_l)?;
    Ok(ev.c * (PI * t_l / ev.half_period).cos())
}

/// Particle velocity v0l·(1 − sin(π t_l/T_l)) [cm/s]; value in [0, v0l].
pub fn particle_velocity(ev: &EmissionEvent, t_l: f64) -> Result<f64> {
    check_interval(ev, t_l)?;
    Ok(ev.v0l * (1.0 - (PI * t_l / ev.half_period).sin()))
}

/// Particle coordinate v0l·t_l + (λ_l/π)·(cos(π t_l/T_l) − 1) [cm].
///
/// This is the time-integral of [`particle_velocity`] with X(0) = 0.
pub fn particle_position(ev: &EmissionEvent, t_l: f64) -> Result<f64> {
    check_interval(ev, t_l)?;
    Ok(ev.v0l * t_l + ev.lambda / PI * ((PI * t_l / ev.half_period).cos() - 1.0))
}

/// Particle displacement over one half-period from the closed-form
/// coordinate: v0l·T_l·(1 − 2/π) [cm].
pub fn displacement_per_period(ev: &EmissionEvent) -> f64 {
    ev.v0l * ev.half_period * (1.0 - 2.0 / PI)
}

/// The alternative printed displacement value 3π·v0l·T_l/2 [cm].
///
/// Inconsistent with [`displacement_per_period`]; the verification report
/// shows both side by side. The longitudinal drift magnitude of
/// [`parallel_velocity`] is tied to this value.
pub fn displacement_per_period_drift_form(ev: &EmissionEvent) -> f64 {
    1.5 * PI * ev.v0l * ev.half_period
}

/// Map a single-period time into oscillation `n`: t_nl = t_l + 2(n−1)·T_l.
pub fn quasicyclic_time(ev: &EmissionEvent, t_l: f64, n: u32) -> Result<f64> {
    check_interval(ev, t_l)?;
    if n < 1 {
        return Err(Error::OscillationIndex { n });
    }
    Ok(t_l + 2.0 * (n - 1) as f64 * ev.half_period)
}

/// Opening time of the n-th longitudinal drift window:
/// τ_nl = (2n−1)·Δt_l + (n−1)·T_l with Δt_l = T_l·l/(2N).
///
/// Note the delay here uses the half-period T_l, not the base period T as
/// in [`EmissionEvent::delta_t`]; both definitions are in active use.
pub fn parallel_window_start(ev: &EmissionEvent, n: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::OscillationIndex { n });
    }
    let delta_t = ev.half_period * ev.slot as f64 / (2.0 * ev.slots as f64);
    Ok((2 * n - 1) as f64 * delta_t + (n - 1) as f64 * ev.half_period)
}

/// Longitudinal drift velocity: (3π/2)·v0l inside the n-th window
/// [τ_nl, τ_nl + T_l], 0 outside. Both window boundaries are inclusive
/// (the step function is 1 at 0).
pub fn parallel_velocity(ev: &EmissionEvent, n: u32, t: f64) -> Result<f64> {
    let start = parallel_window_start(ev, n)?;
    if t >= start && t <= start + ev.half_period {
        Ok(1.5 * PI * ev.v0l)
    } else {
        Ok(0.0)
    }
}

/// State at single-period time `t_l`, with x∥ identically 0.
pub fn state_at(ev: &EmissionEvent, t_l: f64) -> Result<SystemState> {
    Ok(SystemState {
        x: particle_position(ev, t_l)?,
        xdot: particle_velocity(ev, t_l)?,
        x_perp: inerton_perp_position(ev, t_l)?,
        xdot_perp: inerton_perp_velocity(ev, t_l)?,
        x_par: 0.0,
    })
}

/// Sample the stitched trajectory over `n_max` oscillations.
///
/// Within oscillation n the state equals the single-period formulas
/// shifted by the accumulated displacement of the previous n−1
/// oscillations, so X is continuous and nondecreasing across boundaries.
/// Sample times are uniform at T_l/samples_per_period; at a shared
/// boundary the state is taken from the start of the next oscillation
/// (the transverse velocity jumps from −c back to c at re-emission).
pub fn trajectory_series(
    config: &SimulationConfig,
    l: u32,
    n_max: u32,
    samples_per_period: u32,
) -> Result<TimeSeries> {
    if n_max < 1 {
        return Err(Error::OscillationIndex { n: n_max });
    }
    if samples_per_period < 2 {
        return Err(Error::InvalidConfig(format!(
            "samples_per_period must be at least 2, got {samples_per_period}"
        )));
    }
    let ev = emission_schedule(config, l)?;
    let spp = samples_per_period as usize;
    let dt = ev.half_period / samples_per_period as f64;
    let offset = displacement_per_period(&ev);
    let total = n_max as usize * spp + 1;
    let mut samples = Vec::with_capacity(total);
    for i in 0..total {
        let (osc, local) = if i == total - 1 {
            (n_max as usize - 1, spp)
        } else {
            (i / spp, i % spp)
        };
        let t_l = local as f64 * dt;
        let mut state = state_at(&ev, t_l.min(ev.half_period))?;
        state.x += osc as f64 * offset;
        samples.push((i as f64 * dt, state));
    }
    Ok(TimeSeries {
        provenance: Provenance::Analytic,
        samples,
        event: ev,
        config: config.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn unit_event() -> EmissionEvent {
        emission_schedule(&SimulationConfig::unit(), 0).unwrap()
    }

    #[test]
    fn perp_position_boundary_values() {
        let ev = unit_event();
        assert_eq!(inerton_perp_position(&ev, 0.0).unwrap(), 0.0);
        // Λ_l = π ⇒ maximum separation is 1 at mid-period
        let mut ev2 = ev.clone();
        ev2.amplitude = PI;
        assert_relative_eq!(
            inerton_perp_position(&ev2, ev2.half_period / 2.0).unwrap(),
            1.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn perp_position_direct_evaluation() {
        // c=10, T_l=0.5 ⇒ Λ=5; x⊥(0.125) = (5/π)·sin(π/4)
        let mut config = SimulationConfig::unit();
        config.period = 0.5;
        let ev = emission_schedule(&config, 0).unwrap();
        assert_relative_eq!(
            inerton_perp_position(&ev, 0.125).unwrap(),
            5.0 / PI * std::f64::consts::FRAC_PI_4.sin(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            inerton_perp_position(&ev, 0.125).unwrap(),
            1.125_395_395_196_383_6,
            max_relative = 1e-12
        );
    }

    #[test]
    fn perp_velocity_boundaries() {
        let ev = unit_event();
        assert_eq!(inerton_perp_velocity(&ev, 0.0).unwrap(), ev.c);
        assert_relative_eq!(
            inerton_perp_velocity(&ev, ev.half_period / 2.0).unwrap(),
            0.0,
            epsilon = 1e-14
        );
        assert_relative_eq!(
            inerton_perp_velocity(&ev, ev.half_period).unwrap(),
            -ev.c,
            max_relative = 1e-15
        );
    }

    #[test]
    fn particle_velocity_periodicity() {
        let ev = unit_event();
        assert_eq!(particle_velocity(&ev, 0.0).unwrap(), ev.v0l);
        assert_relative_eq!(
            particle_velocity(&ev, ev.half_period / 2.0).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            particle_velocity(&ev, ev.half_period).unwrap(),
            ev.v0l,
            max_relative = 1e-12
        );
    }

    #[test]
    fn particle_position_values() {
        let ev = unit_event();
        assert_eq!(particle_position(&ev, 0.0).unwrap(), 0.0);
        assert_relative_eq!(
            particle_position(&ev, 1.0).unwrap(),
            1.0 - 2.0 / PI,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            particle_position(&ev, 0.5).unwrap(),
            0.5 - 1.0 / PI,
            max_relative = 1e-14
        );
    }

    #[test]
    fn out_of_interval_rejected() {
        let ev = unit_event();
        assert!(particle_position(&ev, -0.1).is_err());
        assert!(particle_position(&ev, ev.half_period + 0.1).is_err());
        assert!(inerton_perp_velocity(&ev, f64::NAN).is_err());
    }

    #[test]
    fn quasicyclic_mapping() {
        let mut ev = unit_event();
        assert_eq!(quasicyclic_time(&ev, 0.3, 1).unwrap(), 0.3);
        ev.half_period = 0.5;
        assert_relative_eq!(quasicyclic_time(&ev, 0.3, 3).unwrap(), 2.3, max_relative = 1e-15);
        assert!(quasicyclic_time(&ev, 0.3, 0).is_err());
    }

    #[test]
    fn window_start_values() {
        let config = SimulationConfig::unit();
        let ev0 = emission_schedule(&config, 0).unwrap();
        assert_eq!(parallel_window_start(&ev0, 1).unwrap(), 0.0);

        let ev5 = emission_schedule(&config, 5).unwrap();
        assert_relative_eq!(parallel_window_start(&ev5, 1).unwrap(), 0.125, max_relative = 1e-15);
        assert_relative_eq!(parallel_window_start(&ev5, 2).unwrap(), 0.875, max_relative = 1e-15);
        assert!(parallel_window_start(&ev5, 0).is_err());
    }

    #[test]
    fn drift_velocity_window() {
        let config = SimulationConfig::unit();
        let ev = emission_schedule(&config, 5).unwrap();
        let start = parallel_window_start(&ev, 1).unwrap();
        let magnitude = 1.5 * PI * ev.v0l;
        assert_eq!(parallel_velocity(&ev, 1, start + 0.1).unwrap(), magnitude);
        assert_eq!(parallel_velocity(&ev, 1, start - 1e-9).unwrap(), 0.0);
        // boundary itself is inside the window
        assert_eq!(parallel_velocity(&ev, 1, start).unwrap(), magnitude);
        assert_eq!(
            parallel_velocity(&ev, 1, start + ev.half_period).unwrap(),
            magnitude
        );
    }

    #[test]
    fn series_single_period_matches_pointwise() {
        let config = SimulationConfig::unit();
        let series = trajectory_series(&config, 0, 1, 64).unwrap();
        let ev = &series.event;
        for (t, state) in &series.samples {
            let expected = state_at(ev, *t).unwrap();
            assert_eq!(state.x, expected.x);
            assert_eq!(state.xdot, expected.xdot);
            assert_eq!(state.x_perp, expected.x_perp);
        }
    }

    #[test]
    fn series_boundaries_accumulate_displacement() {
        let config = SimulationConfig::unit();
        let series = trajectory_series(&config, 0, 4, 100).unwrap();
        let ev = &series.event;
        let per_period = particle_position(ev, ev.half_period).unwrap();
        for k in 1..=4usize {
            let (t, state) = series.samples[k * 100];
            assert_relative_eq!(t, k as f64 * ev.half_period, max_relative = 1e-12);
            assert_relative_eq!(state.x, k as f64 * per_period, max_relative = 1e-12);
        }
    }

    #[test]
    fn series_velocity_nonnegative_and_zero_at_midpoints() {
        let config = SimulationConfig::unit();
        let series = trajectory_series(&config, 0, 4, 100).unwrap();
        for (_, state) in &series.samples {
            assert!(state.xdot >= -1e-15);
        }
        for k in 0..4usize {
            let (_, state) = series.samples[k * 100 + 50];
            assert!(state.xdot.abs() <= 1e-12);
        }
    }

    #[test]
    fn series_x_nondecreasing() {
        let config = SimulationConfig::unit();
        let series = trajectory_series(&config, 3, 3, 57).unwrap();
        for pair in series.samples.windows(2) {
            assert!(pair[1].1.x >= pair[0].1.x - 1e-12);
            assert!(pair[1].0 > pair[0].0);
        }
    }

    #[test]
    fn differential_consistency() {
        // centered finite difference of positions matches velocities
        let config = SimulationConfig::unit();
        let ev = emission_schedule(&config, 2).unwrap();
        let h = 1e-6 * ev.half_period;
        for i in 1..20 {
            let t = ev.half_period * i as f64 / 20.0;
            let dx = (particle_position(&ev, t + h).unwrap()
                - particle_position(&ev, t - h).unwrap())
                / (2.0 * h);
            assert_relative_eq!(dx, particle_velocity(&ev, t).unwrap(), max_relative = 1e-6, epsilon = 1e-9 * ev.v0l);
            let dperp = (inerton_perp_position(&ev, t + h).unwrap()
                - inerton_perp_position(&ev, t - h).unwrap())
                / (2.0 * h);
            assert_relative_eq!(dperp, inerton_perp_velocity(&ev, t).unwrap(), max_relative = 1e-6, epsilon = 1e-9 * ev.c);
        }
    }

    #[test]
    fn ode_residuals_vanish() {
        // substitute the closed forms into the coupled system using
        // analytic second derivatives
        let config = SimulationConfig::unit();
        for l in [0u32, 4, 9] {
            let ev = emission_schedule(&config, l).unwrap();
            let omega = ev.omega();
            for i in 0..=40 {
                let t = ev.half_period * i as f64 / 40.0;
                let phase = omega * t;
                let xddot = -ev.v0l * omega * phase.cos();
                let perp_ddot = -ev.c * omega * phase.sin();
                let r1 = xddot + omega * (ev.v0l / ev.c) * inerton_perp_velocity(&ev, t).unwrap();
                let scale1 = ev.v0l * omega;
                assert!(r1.abs() <= 1e-9 * scale1, "slot {l} t {t}: {r1}");
                let r2 = perp_ddot
                    - omega * (ev.c / ev.v0l) * (particle_velocity(&ev, t).unwrap() - ev.v0l);
                let scale2 = ev.c * omega;
                assert!(r2.abs() <= 1e-9 * scale2, "slot {l} t {t}: {r2}");
                // harmonic form: ẍ⊥ + ω²x⊥ = 0
                let r3 = perp_ddot + omega * omega * inerton_perp_position(&ev, t).unwrap();
                assert!(r3.abs() <= 1e-9 * ev.c * omega);
            }
        }
    }

    #[test]
    fn first_integral_constant() {
        let config = SimulationConfig::unit();
        let ev = emission_schedule(&config, 1).unwrap();
        let omega = ev.omega();
        for i in 0..=100 {
            let t = ev.half_period * i as f64 / 100.0;
            let value = particle_velocity(&ev, t).unwrap()
                + omega * (ev.v0l / ev.c) * inerton_perp_position(&ev, t).unwrap();
            assert_relative_eq!(value, ev.v0l, max_relative = 1e-12);
        }
    }

    #[test]
    fn perp_maximum_at_mid_period() {
        let config = SimulationConfig::unit();
        let ev = emission_schedule(&config, 0).unwrap();
        let peak = inerton_perp_position(&ev, ev.half_period / 2.0).unwrap();
        assert_relative_eq!(peak, ev.amplitude / PI, max_relative = 1e-15);
        for i in 0..=64 {
            let t = ev.half_period * i as f64 / 64.0;
            assert!(inerton_perp_position(&ev, t).unwrap() <= peak + 1e-15);
        }
    }
}
