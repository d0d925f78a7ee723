//! Derived scalar quantities: excitation mass, reduced coupling
//! coefficients, de Broglie relations, action increments and the
//! order-of-magnitude electron estimates.

use crate::config::SimulationConfig;
use crate::error::{Error, Result};

/// Scalar observables for one configuration, all in CGS units.
///
/// `lambda` is the de Broglie wavelength h/(M·v0); `lambda_mech` is the
/// mechanical spatial period v0·T. The two coincide exactly when the
/// configuration is action-calibrated (T = h/(M·v0²), i.e. J = h).
#[derive(Debug, Clone)]
pub struct ObservablesReport {
    /// de Broglie wavelength h/(M·v0) [cm].
    pub lambda: f64,
    /// Mechanical spatial period v0·T [cm].
    pub lambda_mech: f64,
    /// Cloud amplitude λ·c/v0 [cm].
    pub amplitude: f64,
    /// c/v0.
    pub ratio_c_over_v0: f64,
    /// Cloud population estimate λ/R0.
    pub population: f64,
    /// Excitation mass at slot 0, M·(v0/c)² [g].
    pub m0: f64,
    /// Kinetic energy M·v0²/2 [erg].
    pub energy: f64,
    /// Oscillation frequency 1/(2T) [1/s].
    pub frequency: f64,
    /// Momentum M·v0 [g·cm/s].
    pub momentum: f64,
    /// Action increment per period E·2T [erg·s].
    pub action: f64,
    /// J/h.
    pub action_over_h: f64,
}

/// Mass of the excitation created at particle speed `v0l`: M·(v0l/c)².
pub fn inerton_mass(mass: f64, v0l: f64, c: f64) -> Result<f64> {
    if mass <= 0.0 {
        return Err(Error::NonPositiveMass(mass));
    }
    if !(v0l > 0.0) || v0l > c {
        return Err(Error::SpeedAboveC { speed: v0l, c });
    }
    let ratio = v0l / c;
    Ok(mass * ratio * ratio)
}

/// Reduced coupling coefficients (√(m_l/M), √(M/m_l)); the product is 1.
pub fn coupling_coefficients(mass: f64, m_l: f64) -> Result<(f64, f64)> {
    if mass <= 0.0 {
        return Err(Error::NonPositiveMass(mass));
    }
    if m_l <= 0.0 {
        return Err(Error::NonPositiveMass(m_l));
    }
    Ok(((m_l / mass).sqrt(), (mass / m_l).sqrt()))
}

/// de Broglie wavelength h/(M·v0) [cm].
pub fn de_broglie_wavelength(config: &SimulationConfig) -> f64 {
    config.action_constant / (config.mass * config.v0)
}

/// Cloud amplitude Λ = λ·c/v0 with λ the de Broglie wavelength [cm].
pub fn cloud_amplitude(config: &SimulationConfig) -> f64 {
    de_broglie_wavelength(config) * config.c / config.v0
}

/// Cloud population estimate λ/R0.
pub fn cloud_population(config: &SimulationConfig) -> f64 {
    de_broglie_wavelength(config) / config.r0
}

/// Action increment per full period: J = E·2T = M·v0²·T [erg·s].
///
/// Equals p0·λ_mech with λ_mech = v0·T.
pub fn action_increment(config: &SimulationConfig) -> f64 {
    let (energy, _, _) = quantum_relations(config);
    energy * 2.0 * config.period
}

/// The kinematic triple (E, ν, p0) = (M·v0²/2, 1/2T, M·v0).
///
/// When the action increment equals h these satisfy E = h·ν and
/// p0 = h/λ.
pub fn quantum_relations(config: &SimulationConfig) -> (f64, f64, f64) {
    let energy = 0.5 * config.mass * config.v0 * config.v0;
    let frequency = 1.0 / (2.0 * config.period);
    let momentum = config.mass * config.v0;
    (energy, frequency, momentum)
}

/// Assemble the full report for a validated configuration.
pub fn report(config: &SimulationConfig) -> Result<ObservablesReport> {
    config.validate()?;
    let lambda = de_broglie_wavelength(config);
    let (energy, frequency, momentum) = quantum_relations(config);
    let action = action_increment(config);
    Ok(ObservablesReport {
        lambda,
        lambda_mech: config.v0 * config.period,
        amplitude: cloud_amplitude(config),
        ratio_c_over_v0: config.c / config.v0,
        population: cloud_population(config),
        m0: inerton_mass(config.mass, config.v0, config.c)?,
        energy,
        frequency,
        momentum,
        action,
        action_over_h: action / config.action_constant,
    })
}
