//! Per-slot emission schedule: each slot l carries its own half-period,
//! emission-time speed, excitation mass and spatial amplitudes.

use crate::config::SimulationConfig;
use crate::error::{Error, Result};

/// Derived parameters for the excitation emitted in slot `l`.
///
/// All scalars are computed eagerly from the configuration:
///
/// - `delta_t = T·l/(2N)` (emission delay),
/// - `half_period = T·(1 − l/N)`,
/// - `v0l = v0·(1 − sin(πl/2N))`,
/// - `mass = M·(v0l/c)²`, so `mass·c² = M·v0l²`,
/// - `lambda = v0l·half_period`, `amplitude = c·half_period`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmissionEvent {
    /// Slot index in `0..N`.
    pub slot: u32,
    /// Total number of slots N.
    pub slots: u32,
    /// Emission delay Δt_l [s].
    pub delta_t: f64,
    /// Half-period T_l [s].
    pub half_period: f64,
    /// Particle speed at emission v0l [cm/s].
    pub v0l: f64,
    /// Excitation speed c [cm/s].
    pub c: f64,
    /// Excitation mass m_l [g].
    pub mass: f64,
    /// Spatial period λ_l = v0l·T_l [cm].
    pub lambda: f64,
    /// Cloud amplitude Λ_l = c·T_l [cm].
    pub amplitude: f64,
}

/// Compute the emission event for slot `l` of a validated config.
///
/// Slot indices run `0..=N−1`; anything else is a domain error naming the
/// bound.
pub fn emission_schedule(config: &SimulationConfig, l: u32) -> Result<EmissionEvent> {
    config.validate()?;
    if l >= config.slots {
        return Err(Error::SlotOutOfRange {
            index: l,
            max: config.slots - 1,
        });
    }
    let n = config.slots as f64;
    let frac = l as f64 / n;
    let half_period = config.period * (1.0 - frac);
    let v0l = config.v0 * (1.0 - (std::f64::consts::FRAC_PI_2 * frac).sin());
    let ratio = v0l / config.c;
    Ok(EmissionEvent {
        slot: l,
        slots: config.slots,
        delta_t: config.period * l as f64 / (2.0 * n),
        half_period,
        v0l,
        c: config.c,
        mass: config.mass * ratio * ratio,
        lambda: v0l * half_period,
        amplitude: config.c * half_period,
    })
}

impl EmissionEvent {
    /// Angular frequency π/T_l of the transverse oscillation [rad/s].
    pub fn omega(&self) -> f64 {
        std::f64::consts::PI / self.half_period
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn unit() -> SimulationConfig {
        SimulationConfig::unit()
    }

    #[test]
    fn slot_zero_is_identity() {
        let ev = emission_schedule(&unit(), 0).unwrap();
        assert_eq!(ev.v0l, 1.0);
        assert_eq!(ev.half_period, 1.0);
        assert_eq!(ev.delta_t, 0.0);
    }

    #[test]
    fn slot_five_matches_direct_evaluation() {
        // v0l = 1 − sin(π/4), T_l = 0.5, Δt = 0.25 at N=10, T=1, v0=1
        let ev = emission_schedule(&unit(), 5).unwrap();
        assert_relative_eq!(ev.v0l, 1.0 - std::f64::consts::FRAC_PI_4.sin(), max_relative = 1e-15);
        assert_relative_eq!(ev.v0l, 0.292_893_218_813_452_5, max_relative = 1e-12);
        assert_relative_eq!(ev.half_period, 0.5, max_relative = 1e-15);
        assert_relative_eq!(ev.delta_t, 0.25, max_relative = 1e-15);
    }

    #[test]
    fn slot_out_of_range() {
        let err = emission_schedule(&unit(), 10).unwrap_err();
        assert!(err.to_string().contains("0..=9"), "{err}");
    }

    #[test]
    fn kinetic_energy_relation_holds_at_4_ulps() {
        let config = unit();
        for l in 0..config.slots {
            let ev = emission_schedule(&config, l).unwrap();
            let lhs = ev.mass * config.c * config.c;
            let rhs = config.mass * ev.v0l * ev.v0l;
            let ulp = rhs * f64::EPSILON;
            assert!((lhs - rhs).abs() <= 4.0 * ulp, "slot {l}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn v0l_nonincreasing_in_slot() {
        let config = unit();
        let mut prev = f64::INFINITY;
        for l in 0..config.slots {
            let ev = emission_schedule(&config, l).unwrap();
            assert!(ev.v0l <= prev);
            assert!(ev.v0l > 0.0 && ev.v0l <= config.v0);
            prev = ev.v0l;
        }
    }

    proptest! {
        #[test]
        fn amplitude_ratio_is_speed_ratio(
            v0 in 0.01f64..9.9,
            period in 0.01f64..100.0,
            slots in 1u32..64,
            l_frac in 0.0f64..1.0,
        ) {
            let mut config = SimulationConfig::unit();
            config.v0 = v0;
            config.period = period;
            config.slots = slots;
            let l = ((slots as f64 - 1.0) * l_frac) as u32;
            let ev = emission_schedule(&config, l).unwrap();
            // Λ_l/λ_l = c/v0l as a ratio of the defining products
            prop_assert!(
                ((ev.amplitude / ev.lambda) - (ev.c / ev.v0l)).abs()
                    <= 1e-12 * (ev.c / ev.v0l)
            );
            prop_assert!(ev.half_period > 0.0);
        }
    }
}
