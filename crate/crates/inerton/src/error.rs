use thiserror::Error;

/// Errors produced by the library and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    /// Emission slot index outside `0..N`.
    #[error("slot index {index} out of range; valid slots are 0..={max}")]
    SlotOutOfRange { index: u32, max: u32 },

    /// Proper time outside the single-period validity interval.
    #[error("time {t} outside the single-period interval [0, {t_max}]")]
    TimeOutOfRange { t: f64, t_max: f64 },

    /// Oscillation index must start at 1.
    #[error("oscillation index {n} out of range; indices run 1, 2, 3, ...")]
    OscillationIndex { n: u32 },

    /// A configuration invariant was violated.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The integrator produced a nonfinite state component.
    #[error("nonfinite state encountered at step {step}")]
    NonFinite { step: usize },

    /// Two series cannot be compared sample by sample.
    #[error("series grids do not match: {0}")]
    GridMismatch(String),

    /// Coordinate outside the classically allowed oscillator region.
    #[error("coordinate {x} outside classically allowed region |X| <= {amplitude}")]
    ForbiddenRegion { x: f64, amplitude: f64 },

    /// Nonpositive mass where a positive one is required.
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),

    /// Emission-time speed above the excitation speed.
    #[error("speed {speed} exceeds excitation speed {c}")]
    SpeedAboveC { speed: f64, c: f64 },

    /// Config file could not be parsed.
    #[error("config parse error at line {line}: {message}")]
    ConfigParse { line: usize, message: String },

    /// Scenario name not recognized.
    #[error("unknown scenario '{0}'; available scenarios: unit, electron")]
    UnknownScenario(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable CLI exit code: 1 for validation/verification failures,
    /// 2 for I/O and parse failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) | Error::ConfigParse { .. } => 2,
            _ => 1,
        }
    }
}
