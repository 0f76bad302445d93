//! Scalar fields and truncated series arithmetic shared by every other module.

mod laurent;
mod qseries;
mod scalar;
pub mod tolerance;
mod zpoly;

pub use laurent::LaurentXi;
pub use qseries::{binomial, pochhammer, qs_inv, qs_mul, resolvent, unit_pow, QSeries};
pub use scalar::{parse_rational, rational_to_f64, FromRational, Module, Rational, Ring, Scalar, C64};
pub use zpoly::ZPoly;

/// Which scalar field a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarMode {
    Rational,
    Complex,
}

impl ScalarMode {
    pub fn name(self) -> &'static str {
        match self {
            ScalarMode::Rational => "rational",
            ScalarMode::Complex => "complex",
        }
    }
}

impl std::str::FromStr for ScalarMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rational" => Ok(ScalarMode::Rational),
            "complex" => Ok(ScalarMode::Complex),
            _ => Err(format!("unknown scalar mode '{s}'")),
        }
    }
}
