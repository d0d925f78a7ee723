//! Trajectory CSV: fixed header, comma separators, LF line endings,
//! shortest round-trip decimal formatting.

use crate::error::{Error, Result};
use crate::numfmt::shortest;
use crate::series::{Provenance, SystemState, TimeSeries};

pub const HEADER: &str = "t,X,Xdot,x_perp,xdot_perp,x_par,provenance";

/// Render a series to CSV text. Identical series give identical bytes.
pub fn to_csv(series: &TimeSeries) -> String {
    let mut out = String::with_capacity(series.len() * 64 + HEADER.len() + 1);
    out.push_str(HEADER);
    out.push('\n');
    for (t, state) in &series.samples {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            shortest(*t),
            shortest(state.x),
            shortest(state.xdot),
            shortest(state.x_perp),
            shortest(state.xdot_perp),
            shortest(state.x_par),
            series.provenance
        ));
    }
    out
}

/// Parse CSV text back into (t, state, provenance) rows. Lossless with
/// respect to [`to_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<(f64, SystemState, Provenance)>> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != HEADER {
        return Err(Error::GridMismatch(format!(
            "unexpected CSV header '{header}'"
        )));
    }
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(Error::ConfigParse {
                line: idx + 2,
                message: format!("expected 7 CSV fields, got {}", fields.len()),
            });
        }
        let num = |i: usize| -> Result<f64> {
            fields[i].parse().map_err(|_| Error::ConfigParse {
                line: idx + 2,
                message: format!("'{}' is not a number", fields[i]),
            })
        };
        let provenance = match fields[6] {
            "analytic" => Provenance::Analytic,
            "integrated" => Provenance::Integrated,
            other => {
                return Err(Error::ConfigParse {
                    line: idx + 2,
                    message: format!("unknown provenance '{other}'"),
                })
            }
        };
        rows.push((
            num(0)?,
            SystemState {
                x: num(1)?,
                xdot: num(2)?,
                x_perp: num(3)?,
                xdot_perp: num(4)?,
                x_par: num(5)?,
            },
            provenance,
        ));
    }
    Ok(rows)
}
