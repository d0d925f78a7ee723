//! Deterministic simulation of a free particle coupled to a cloud of
//! vacuum excitations: closed-form trajectory evaluation, an independent
//! Runge–Kutta oracle, and the derived wave-mechanics observables.
//!
//! All quantities are in CGS units (cm, g, s, erg). Everything is a pure
//! function of its inputs; identical inputs give bit-identical outputs.
//!
//! The `book/` directory holds the narrative guide; its code snippets run
//! as doc-tests through the hidden modules at the bottom of this file.

pub mod analytic;
pub mod cli;
pub mod config;
pub mod error;
pub mod integrator;
pub mod numfmt;
pub mod observables;
pub mod rotation;
pub mod schedule;
pub mod series;
pub mod wavemech;

pub use config::SimulationConfig;
pub use error::{Error, Result};
pub use schedule::{emission_schedule, EmissionEvent};
pub use series::{Provenance, SystemState, TimeSeries};

// Keep the guide's code snippets compiling: every fenced Rust block in
// the book runs as a doc-test of these hidden modules.
#[doc = include_str!("../../../book/src/model.md")]
mod _book_model {}
#[doc = include_str!("../../../book/src/closed-form.md")]
mod _book_closed_form {}
#[doc = include_str!("../../../book/src/oracle.md")]
mod _book_oracle {}
#[doc = include_str!("../../../book/src/observables.md")]
mod _book_observables {}
#[doc = include_str!("../../../book/src/wave-mechanics.md")]
mod _book_wave_mechanics {}
