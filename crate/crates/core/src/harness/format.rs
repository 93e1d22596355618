/// Magnitudes below this are reported as zero.
pub const ZERO_THRESHOLD: f64 = 1e-20;

/// Table style: three significant digits (`1.11E-13`), or `0`.
pub fn format_sci(v: f64) -> String {
    if v.abs() < ZERO_THRESHOLD {
        "0".to_string()
    } else {
        format!("{v:.2E}")
    }
}

/// Shortest round-tripping scientific form, or `0`.
pub fn format_full(v: f64) -> String {
    if v.abs() < ZERO_THRESHOLD {
        "0".to_string()
    } else {
        format!("{v:e}")
    }
}
