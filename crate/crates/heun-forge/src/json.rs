//! Deterministic JSON: sorted keys (serde_json's default map), floats with
//! 17 significant digits, exact values as `"p/q"`, complex as `[re, im]`.

use heun_core::seriescore::{Scalar, C64};
use serde_json::{Map, Number, Value};

pub const SCHEMA: &str = "heun-forge/1";

pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let s = format!("{x:.16e}");
    serde_json::from_str::<Number>(&s).map(Value::Number).unwrap_or(Value::Null)
}

pub fn complex(c: C64) -> Value {
    Value::Array(vec![float(c.re), float(c.im)])
}

pub fn scalar<S: Scalar>(s: &S) -> Value {
    match s.exact_repr() {
        Some(r) => Value::String(r),
        None => complex(s.to_c64()),
    }
}

pub fn object<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Top-level document with the schema tag.
pub fn document(mut body: Map<String, Value>) -> Value {
    body.insert("schema".into(), Value::String(SCHEMA.into()));
    Value::Object(body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use heun_core::seriescore::Rational;

    #[test]
    fn float_digits() {
        assert_eq!(float(0.1).to_string(), "1.0000000000000001e-1");
        assert_eq!(float(-2.0).to_string(), "-2.0000000000000000e+0");
        assert_eq!(float(f64::NAN), Value::Null);
    }

    #[test]
    fn exact_as_fraction() {
        let r = Rational::new(3.into(), 6.into());
        assert_eq!(scalar(&r), Value::String("1/2".into()));
        assert_eq!(scalar(&C64::new(1.0, 0.0)).to_string(), "[1.0000000000000000e+0,0.0000000000000000e+0]");
    }

    #[test]
    fn keys_sorted() {
        let d = document(object([("zeta", Value::Null), ("alpha", Value::Null)]));
        assert_eq!(d.to_string(), r#"{"alpha":null,"schema":"heun-forge/1","zeta":null}"#);
    }
}
