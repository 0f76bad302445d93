//! The coefficient fields: exact rationals and complex binary64 pairs.

use super::tolerance;
use crate::error::{HeunError, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rational = BigRational;
pub type C64 = Complex64;

/// Commutative ring with owned arithmetic. Implemented by the scalar fields
/// and by polynomials over them.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn unit() -> Self;

    fn from_int(k: i64) -> Self;

    /// Equality up to the scalar mode's tolerance.
    fn approx_eq(&self, other: &Self) -> bool;

    fn is_unit_value(&self) -> bool {
        self.approx_eq(&Self::unit())
    }
}

/// A ring that can be scaled by elements of the field `S`.
pub trait Module<S>: Ring {
    fn scale(&self, s: &S) -> Self;
    fn from_scalar(s: S) -> Self;
}

/// Field element used throughout the library.
pub trait Scalar: Ring + Module<Self> {
    /// True for exact arithmetic (comparisons are then equalities).
    const EXACT: bool;
    const NAME: &'static str;

    fn from_i64(v: i64) -> Self;
    /// `p / q`; `q` must be nonzero.
    fn from_ratio(p: i64, q: i64) -> Self;
    fn to_c64(&self) -> C64;

    fn modulus(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Multiplicative inverse; exact zero or a modulus below `eps_div` is an error.
    fn try_inv(&self) -> Result<Self>;

    fn try_div(&self, d: &Self) -> Result<Self> {
        Ok(self.clone() * d.try_inv()?)
    }

    /// Whether this value, used as a recursion denominator, counts as zero.
    fn is_resonant(&self) -> bool;

    /// `Some(k)` if the value is (numerically) the integer `k`.
    fn as_integer(&self) -> Option<i64>;

    /// Lossless `p/q` rendering in exact mode.
    fn exact_repr(&self) -> Option<String> {
        None
    }

    fn pow_u(&self, k: u32) -> Self {
        let mut acc = Self::unit();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    /// `true` if the value is a non-negative integer.
    fn is_nonneg_integer(&self) -> bool {
        matches!(self.as_integer(), Some(k) if k >= 0)
    }
}

impl Ring for Rational {
    fn unit() -> Self {
        Rational::one()
    }

    fn from_int(k: i64) -> Self {
        Rational::from_integer(BigInt::from(k))
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
}

impl Module<Rational> for Rational {
    fn scale(&self, s: &Rational) -> Self {
        self * s
    }

    fn from_scalar(s: Rational) -> Self {
        s
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const NAME: &'static str = "rational";

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn to_c64(&self) -> C64 {
        C64::new(rational_to_f64(self), 0.0)
    }

    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(HeunError::DivisionByZero("exact zero".into()))
        } else {
            Ok(self.recip())
        }
    }

    fn is_resonant(&self) -> bool {
        self.is_zero()
    }

    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }

    fn exact_repr(&self) -> Option<String> {
        Some(format!("{}/{}", self.numer(), self.denom()))
    }
}

/// Nearest binary64 to a big rational, robust for huge numerators and denominators.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db - 60;
    let (n, d) = if shift > 0 {
        (r.numer().clone(), r.denom().clone() << (shift as usize))
    } else {
        (r.numer().clone() << ((-shift) as usize), r.denom().clone())
    };
    let q = (n / d).to_f64().unwrap_or(f64::NAN);
    q * 2f64.powi(shift as i32)
}

/// Parse `p/q`, an integer, or a decimal literal into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let neg = mant.starts_with('-');
    let mant = mant.trim_start_matches(['+', '-']);
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{}{}", ip, fp).parse().ok()?;
    let scale = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

impl Ring for C64 {
    fn unit() -> Self {
        C64::new(1.0, 0.0)
    }

    fn from_int(k: i64) -> Self {
        C64::new(k as f64, 0.0)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        let scale = 1f64.max(self.norm()).max(other.norm());
        (self - other).norm() <= tolerance::eps_eq() * scale
    }
}

impl Module<C64> for C64 {
    fn scale(&self, s: &C64) -> Self {
        self * s
    }

    fn from_scalar(s: C64) -> Self {
        s
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;
    const NAME: &'static str = "complex";

    fn from_i64(v: i64) -> Self {
        C64::new(v as f64, 0.0)
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        C64::new(p as f64 / q as f64, 0.0)
    }

    fn to_c64(&self) -> C64 {
        *self
    }

    fn try_inv(&self) -> Result<Self> {
        if self.norm() < tolerance::eps_div() {
            Err(HeunError::DivisionByZero(format!("|{}| below eps_div", self)))
        } else {
            Ok(self.inv())
        }
    }

    fn is_resonant(&self) -> bool {
        self.norm() < tolerance::eps_res()
    }

    fn as_integer(&self) -> Option<i64> {
        let k = self.re.round();
        let tol = tolerance::eps_eq() * 1f64.max(k.abs());
        if (self.re - k).abs() <= tol && self.im.abs() <= tol && k.abs() < 9.0e15 {
            Some(k as i64)
        } else {
            None
        }
    }
}

/// Convert an exact rational into the target scalar field.
pub trait FromRational: Scalar {
    fn from_rational(r: &Rational) -> Self;
}

impl FromRational for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl FromRational for C64 {
    fn from_rational(r: &Rational) -> Self {
        C64::new(rational_to_f64(r), 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4"), Some(Rational::from_ratio(3, 4)));
        assert_eq!(parse_rational("-0.25"), Some(Rational::from_ratio(-1, 4)));
        assert_eq!(parse_rational("2"), Some(Rational::from_i64(2)));
        assert_eq!(parse_rational("1e-3"), Some(Rational::from_ratio(1, 1000)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn inverse_guards() {
        assert!(Rational::zero().try_inv().is_err());
        assert!(C64::new(1e-14, 0.0).try_inv().is_err());
        assert_eq!(
            Rational::from_i64(4).try_inv().unwrap(),
            Rational::from_ratio(1, 4)
        );
    }

    #[test]
    fn complex_tolerant_equality() {
        let a = C64::new(1.0, 2.0);
        assert!(a.approx_eq(&(a + C64::new(1e-12, 0.0))));
        assert!(!a.approx_eq(&(a + C64::new(1e-6, 0.0))));
    }

    #[test]
    fn huge_rational_to_float() {
        let big = Rational::new(
            num_traits::pow(BigInt::from(10), 400) * 3,
            num_traits::pow(BigInt::from(10), 400),
        );
        assert!((rational_to_f64(&big) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn integer_detection() {
        assert_eq!(Rational::from_i64(-3).as_integer(), Some(-3));
        assert_eq!(Rational::from_ratio(1, 2).as_integer(), None);
        assert_eq!(C64::new(2.0 + 1e-13, 0.0).as_integer(), Some(2));
        assert_eq!(C64::new(2.0, 0.1).as_integer(), None);
    }
}
