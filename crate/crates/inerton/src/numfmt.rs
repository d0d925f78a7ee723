//! Shortest round-trip decimal formatting for emitted files.

/// Format with the shortest representation that parses back to the same
/// bits, using scientific notation outside a readable magnitude range.
pub fn shortest(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs();
    if magnitude >= 1e-4 && magnitude < 1e16 {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}
