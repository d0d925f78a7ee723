//! Trajectory records: instantaneous states and uniformly sampled series.

use crate::config::SimulationConfig;
use crate::schedule::EmissionEvent;

/// Instantaneous dynamical state of the particle and one excitation.
///
/// Component ordering is fixed as (X, Ẋ, x⊥, ẋ⊥, x∥) everywhere a state
/// is serialized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemState {
    /// Particle coordinate along the trajectory [cm].
    pub x: f64,
    /// Particle velocity [cm/s].
    pub xdot: f64,
    /// Excitation transverse coordinate [cm].
    pub x_perp: f64,
    /// Excitation transverse velocity [cm/s].
    pub xdot_perp: f64,
    /// Excitation longitudinal coordinate [cm].
    pub x_par: f64,
}

impl SystemState {
    pub const COMPONENT_NAMES: [&'static str; 5] = ["X", "Xdot", "x_perp", "xdot_perp", "x_par"];

    pub fn components(&self) -> [f64; 5] {
        [self.x, self.xdot, self.x_perp, self.xdot_perp, self.x_par]
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|v| v.is_finite())
    }
}

/// How a series was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Analytic,
    Integrated,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Analytic => write!(f, "analytic"),
            Provenance::Integrated => write!(f, "integrated"),
        }
    }
}

/// Uniformly sampled trajectory with the inputs that produced it.
#[derive(Debug, Clone)]
pub struct TimeSeries {
    pub provenance: Provenance,
    /// Ordered (t, state) samples; times strictly increasing with uniform
    /// spacing.
    pub samples: Vec<(f64, SystemState)>,
    pub event: EmissionEvent,
    pub config: SimulationConfig,
}

impl TimeSeries {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Last (t, state) sample.
    pub fn endpoint(&self) -> (f64, SystemState) {
        *self.samples.last().expect("series has at least one sample")
    }
}
