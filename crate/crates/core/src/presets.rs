//! Named series and arrays, so that standard examples are one-liners.

use crate::error::{Error, Result};
use crate::fps::Series;
use crate::involution::alpha_log_phi;
use crate::rational::Rational;
use crate::riordan::RiordanArray;

pub const ARRAY_PRESETS: &[&str] = &["identity", "minus-identity", "pascal", "alternating"];

pub fn array_preset(name: &str, order: usize) -> Result<RiordanArray> {
    match name {
        "identity" => Ok(RiordanArray::identity(order)),
        "minus-identity" => Ok(RiordanArray::minus_identity(order)),
        "pascal" => Ok(RiordanArray::pascal(order)),
        "alternating" => Ok(RiordanArray::alternating(order)),
        _ => Err(Error::invalid(format!(
            "unknown array preset {name:?} (expected one of {})",
            ARRAY_PRESETS.join(", ")
        ))),
    }
}

/// `alpha-log` is `alpha x / log(1 - alpha x)` and needs `alpha`.
pub fn series_preset(name: &str, alpha: Option<&Rational>, order: usize) -> Result<Series> {
    match name {
        "alpha-log" => {
            let alpha = alpha.ok_or_else(|| Error::invalid("preset alpha-log needs --alpha"))?;
            alpha_log_phi(alpha, order)
        }
        "one" => Ok(Series::one(order)),
        "exp" => Ok(Series::exponential(order)),
        _ => Err(Error::invalid(format!(
            "unknown series preset {name:?} (expected alpha-log, one or exp)"
        ))),
    }
}

/// A bracketed literal or `preset:NAME`.
pub fn parse_series_arg(text: &str, alpha: Option<&Rational>, order: usize) -> Result<Series> {
    match text.trim().strip_prefix("preset:") {
        Some(name) => series_preset(name, alpha, order),
        None => Series::parse_literal(text, order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn lookups() {
        assert_eq!(array_preset("pascal", 3).unwrap(), RiordanArray::pascal(3));
        assert!(array_preset("catalan", 3).unwrap_err().is_input());
        let phi = parse_series_arg("preset:alpha-log", Some(&int(2)), 4).unwrap();
        assert_eq!(phi.coeff(0), &int(-1));
        assert!(parse_series_arg("preset:alpha-log", None, 4).is_err());
        assert_eq!(parse_series_arg("[1,2]", None, 2).unwrap().coeff(1), &int(2));
        assert!(parse_series_arg("preset:nope", None, 2).is_err());
    }
}
