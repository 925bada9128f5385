//! Number rendering shared by every report format.

use serde::ser::Error as _;
use serde::{Serialize, Serializer};

/// 15 significant digits, lowercase scientific notation.
pub fn sci(value: f64) -> String {
    // -0 renders as 0 so reports do not depend on the sign of a cancelled zero
    let value = if value == 0.0 { 0.0 } else { value };
    format!("{value:.14e}")
}

/// `p/q` when `value` is within 1e-12 of a fraction with denominator at most 1000.
pub fn fraction(value: f64) -> Option<String> {
    (1..=1000u32).find_map(|q| {
        let p = (value * f64::from(q)).round();
        ((value - p / f64::from(q)).abs() < 1e-12).then(|| format!("{p}/{q}"))
    })
}

/// A float that serializes as a JSON number in [`sci`] form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sci(pub f64);

impl Serialize for Sci {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(S::Error::custom(format!("non-finite value {}", self.0)));
        }
        let raw =
            serde_json::value::RawValue::from_string(sci(self.0)).map_err(S::Error::custom)?;
        raw.serialize(serializer)
    }
}

impl std::fmt::Display for Sci {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&sci(self.0))
    }
}
