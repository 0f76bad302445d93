//! Parsing of numeric arguments: exact rationals (`p/q`, integers, decimals)
//! and complex literals (`a+bi`, `bi`, or a pair `re,im`).

use crate::error::{CliError, CliResult};
use heun_core::seriescore::{parse_rational, rational_to_f64, Rational, C64};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Complex(C64),
}

impl Value {
    pub fn to_c64(&self) -> C64 {
        match self {
            Value::Exact(r) => C64::new(rational_to_f64(r), 0.0),
            Value::Complex(c) => *c,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Complex(_) => None,
        }
    }
}

fn parse_f64(s: &str) -> Option<f64> {
    s.trim().parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Split `a+bi` at the sign that separates real and imaginary parts,
/// ignoring signs that belong to an exponent.
fn split_complex(s: &str) -> Option<(&str, &str)> {
    let body = s.strip_suffix(['i', 'j'])?;
    let bytes = body.as_bytes();
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            return Some((&body[..k], &body[k..]));
        }
    }
    Some(("0", body))
}

fn imag_part(s: &str) -> Option<f64> {
    match s.trim() {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        t => parse_f64(t),
    }
}

pub fn parse_value(s: &str) -> CliResult<Value> {
    let s = s.trim();
    if let Some(r) = parse_rational(s) {
        return Ok(Value::Exact(r));
    }
    if let Some((re, im)) = split_complex(s) {
        if let (Some(re), Some(im)) = (parse_f64(re), imag_part(im)) {
            return Ok(Value::Complex(C64::new(re, im)));
        }
    }
    Err(CliError::Usage(format!("cannot parse number '{s}'")))
}

/// A complex number given as `re,im`, `a+bi`, or a plain real.
pub fn parse_complex(s: &str) -> CliResult<C64> {
    if let Some((re, im)) = s.split_once(',') {
        return match (parse_f64(re), parse_f64(im)) {
            (Some(re), Some(im)) => Ok(C64::new(re, im)),
            _ => Err(CliError::Usage(format!("cannot parse complex pair '{s}'"))),
        };
    }
    parse_value(s).map(|v| v.to_c64())
}

/// Four comma-separated couplings.
pub fn parse_g(s: &str) -> CliResult<[Value; 4]> {
    let parts: Vec<Value> = s.split(',').map(parse_value).collect::<CliResult<_>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<Value>| CliError::Usage(format!("--g needs 4 values, got {}", v.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_forms() {
        assert_eq!(parse_value("1/2").unwrap(), Value::Exact(Rational::new(1.into(), 2.into())));
        assert_eq!(parse_value("0.25").unwrap(), Value::Exact(Rational::new(1.into(), 4.into())));
        assert_eq!(parse_value("-3").unwrap(), Value::Exact(Rational::from_integer((-3).into())));
    }

    #[test]
    fn complex_forms() {
        assert_eq!(parse_value("1+2i").unwrap(), Value::Complex(C64::new(1.0, 2.0)));
        assert_eq!(parse_value("-0.5-i").unwrap(), Value::Complex(C64::new(-0.5, -1.0)));
        assert_eq!(parse_value("3i").unwrap(), Value::Complex(C64::new(0.0, 3.0)));
        assert_eq!(parse_value("1e-3+2e-1i").unwrap(), Value::Complex(C64::new(1e-3, 0.2)));
        assert_eq!(parse_complex("0.1,1.2").unwrap(), C64::new(0.1, 1.2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_value("abc").is_err());
        assert!(parse_value("1/0").is_err());
        assert!(parse_g("1,2,3").is_err());
    }
}
