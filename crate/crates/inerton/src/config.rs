//! Simulation configuration: physical constants, model parameters and
//! numerical controls, all in CGS units (cm, g, s, erg).

use crate::error::{Error, Result};

/// Electron rest mass [g].
pub const ELECTRON_MASS_G: f64 = 9.109_383_701_5e-28;
/// Speed of light [cm/s].
pub const SPEED_OF_LIGHT_CM_S: f64 = 2.997_924_58e10;
/// Planck constant [erg·s].
pub const PLANCK_ERG_S: f64 = 6.626_070_15e-27;
/// Default superparticle size when a config leaves R0 unset [cm].
pub const DEFAULT_R0_CM: f64 = 1e-28;

/// All free parameters of the model plus numerical controls.
///
/// Invariants are enforced by [`SimulationConfig::validate`]:
/// `0 < v0 < c`, `M > 0`, `T > 0`, `N >= 1`, `R0 > 0`, `h > 0`,
/// `steps_per_period >= 2`, `n_oscillations >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationConfig {
    /// Particle mass [g].
    pub mass: f64,
    /// Initial particle speed [cm/s].
    pub v0: f64,
    /// Initial excitation speed [cm/s].
    pub c: f64,
    /// Base half-period [s].
    pub period: f64,
    /// Number of emission slots.
    pub slots: u32,
    /// Superparticle size [cm].
    pub r0: f64,
    /// Action constant [erg·s].
    pub action_constant: f64,
    /// Integration steps per half-period.
    pub steps_per_period: u32,
    /// Number of oscillations for stitched trajectories.
    pub n_oscillations: u32,
    /// True when `r0` was filled in with [`DEFAULT_R0_CM`] rather than
    /// given explicitly.
    pub r0_defaulted: bool,
}

impl SimulationConfig {
    /// Test-friendly scenario: M=1 g, v0=1 cm/s, c=10 cm/s, T=1 s, N=10.
    ///
    /// With h=1 erg·s this scenario is action-calibrated: T = h/(M v0²),
    /// so J = h exactly.
    pub fn unit() -> Self {
        SimulationConfig {
            mass: 1.0,
            v0: 1.0,
            c: 10.0,
            period: 1.0,
            slots: 10,
            r0: 0.1,
            action_constant: 1.0,
            steps_per_period: 10_000,
            n_oscillations: 4,
            r0_defaulted: false,
        }
    }

    /// Free electron at v0 = 10⁵ cm/s, with T chosen as h/(M v0²) so the
    /// action increment per period equals h.
    pub fn electron() -> Self {
        let mass = ELECTRON_MASS_G;
        let v0 = 1e5;
        let h = PLANCK_ERG_S;
        SimulationConfig {
            mass,
            v0,
            c: SPEED_OF_LIGHT_CM_S,
            period: h / (mass * v0 * v0),
            slots: 10,
            r0: DEFAULT_R0_CM,
            action_constant: h,
            steps_per_period: 10_000,
            n_oscillations: 4,
            r0_defaulted: false,
        }
    }

    /// Look up a built-in scenario by name.
    pub fn scenario(name: &str) -> Result<Self> {
        match name {
            "unit" => Ok(Self::unit()),
            "electron" => Ok(Self::electron()),
            other => Err(Error::UnknownScenario(other.to_string())),
        }
    }

    /// Check every configuration invariant, naming the violated one.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.mass > 0.0) {
            return fail(format!("M must be positive, got {}", self.mass));
        }
        if !(self.v0 > 0.0) {
            return fail(format!("v0 must be positive, got {}", self.v0));
        }
        if !(self.v0 < self.c) {
            return fail(format!("v0 must be below c, got v0={} c={}", self.v0, self.c));
        }
        if !(self.period > 0.0) {
            return fail(format!("T must be positive, got {}", self.period));
        }
        if self.slots < 1 {
            return fail("N must be at least 1".to_string());
        }
        if !(self.r0 > 0.0) {
            return fail(format!("R0 must be positive, got {}", self.r0));
        }
        if !(self.action_constant > 0.0) {
            return fail(format!("h must be positive, got {}", self.action_constant));
        }
        if self.steps_per_period < 2 {
            return fail(format!(
                "steps_per_period must be at least 2, got {}",
                self.steps_per_period
            ));
        }
        if self.n_oscillations < 1 {
            return fail("n_oscillations must be at least 1".to_string());
        }
        Ok(())
    }

    /// Parse a flat `key = value` config file with `#` comments.
    ///
    /// Keys carry unit suffixes: `M_g`, `v0_cm_per_s`, `c_cm_per_s`, `T_s`,
    /// `N`, `R0_cm`, `h_erg_s`, `steps_per_period`, `n_oscillations`.
    /// A missing `R0_cm` defaults to [`DEFAULT_R0_CM`] and is flagged.
    pub fn parse(text: &str) -> Result<Self> {
        let mut mass = None;
        let mut v0 = None;
        let mut c = None;
        let mut period = None;
        let mut slots = None;
        let mut r0 = None;
        let mut h = None;
        let mut steps = None;
        let mut oscillations = None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::ConfigParse {
                line: line_no,
                message: format!("expected 'key = value', got '{line}'"),
            })?;
            let key = key.trim();
            let value = value.trim();
            let parse_f64 = |v: &str| -> Result<f64> {
                v.parse().map_err(|_| Error::ConfigParse {
                    line: line_no,
                    message: format!("'{v}' is not a valid number for key '{key}'"),
                })
            };
            let parse_u32 = |v: &str| -> Result<u32> {
                v.parse().map_err(|_| Error::ConfigParse {
                    line: line_no,
                    message: format!("'{v}' is not a valid integer for key '{key}'"),
                })
            };
            match key {
                "M_g" => mass = Some(parse_f64(value)?),
                "v0_cm_per_s" => v0 = Some(parse_f64(value)?),
                "c_cm_per_s" => c = Some(parse_f64(value)?),
                "T_s" => period = Some(parse_f64(value)?),
                "N" => slots = Some(parse_u32(value)?),
                "R0_cm" => r0 = Some(parse_f64(value)?),
                "h_erg_s" => h = Some(parse_f64(value)?),
                "steps_per_period" => steps = Some(parse_u32(value)?),
                "n_oscillations" => oscillations = Some(parse_u32(value)?),
                other => {
                    return Err(Error::ConfigParse {
                        line: line_no,
                        message: format!("unknown key '{other}'"),
                    })
                }
            }
        }

        let require = |name: &str, v: Option<f64>| -> Result<f64> {
            v.ok_or_else(|| Error::ConfigParse {
                line: 0,
                message: format!("missing required key '{name}'"),
            })
        };
        let r0_defaulted = r0.is_none();
        let config = SimulationConfig {
            mass: require("M_g", mass)?,
            v0: require("v0_cm_per_s", v0)?,
            c: require("c_cm_per_s", c)?,
            period: require("T_s", period)?,
            slots: slots.unwrap_or(10),
            r0: r0.unwrap_or(DEFAULT_R0_CM),
            action_constant: require("h_erg_s", h)?,
            steps_per_period: steps.unwrap_or(10_000),
            n_oscillations: oscillations.unwrap_or(1),
            r0_defaulted,
        };
        Ok(config)
    }

    /// Render back to the flat `key = value` form accepted by [`parse`].
    ///
    /// [`parse`]: SimulationConfig::parse
    pub fn to_config_text(&self) -> String {
        format!(
            "M_g = {}\nv0_cm_per_s = {}\nc_cm_per_s = {}\nT_s = {}\nN = {}\nR0_cm = {}\nh_erg_s = {}\nsteps_per_period = {}\nn_oscillations = {}\n",
            self.mass,
            self.v0,
            self.c,
            self.period,
            self.slots,
            self.r0,
            self.action_constant,
            self.steps_per_period,
            self.n_oscillations,
        )
    }

    /// Read and validate a config file from disk.
    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let config = Self::parse(&text)?;
        config.validate()?;
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenarios_validate() {
        SimulationConfig::unit().validate().unwrap();
        SimulationConfig::electron().validate().unwrap();
    }

    #[test]
    fn unknown_scenario_lists_options() {
        let err = SimulationConfig::scenario("positron").unwrap_err();
        assert!(err.to_string().contains("unit"));
        assert!(err.to_string().contains("electron"));
    }

    #[test]
    fn rejects_v0_at_or_above_c() {
        let mut config = SimulationConfig::unit();
        config.v0 = config.c;
        let err = config.validate().unwrap_err();
        assert!(err.to_string().contains("v0"));
    }

    #[test]
    fn parse_round_trip() {
        let config = SimulationConfig::unit();
        let parsed = SimulationConfig::parse(&config.to_config_text()).unwrap();
        assert_eq!(config, parsed);
    }

    #[test]
    fn parse_reports_line_number() {
        let err = SimulationConfig::parse("M_g = 1\nnot a line\n").unwrap_err();
        match err {
            Error::ConfigParse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other}"),
        }
        let err = SimulationConfig::parse("M_g = abc\n").unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn missing_r0_defaults_with_flag() {
        let text = "M_g = 1\nv0_cm_per_s = 1\nc_cm_per_s = 10\nT_s = 1\nh_erg_s = 1\n";
        let config = SimulationConfig::parse(text).unwrap();
        assert_eq!(config.r0, DEFAULT_R0_CM);
        assert!(config.r0_defaulted);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# scenario\nM_g = 1 # grams\n\nv0_cm_per_s = 1\nc_cm_per_s = 10\nT_s = 1\nh_erg_s = 1\n";
        SimulationConfig::parse(text).unwrap();
    }
}
