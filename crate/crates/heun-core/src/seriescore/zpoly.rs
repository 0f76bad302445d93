//! Polynomials in z = cos x, stored in ascending powers.

use super::scalar::{Module, Ring, Scalar, C64};
use num_traits::Zero;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq)]
pub struct ZPoly<S> {
    c: Vec<S>,
}

impl<S: Scalar> ZPoly<S> {
    pub fn from_coeffs(c: Vec<S>) -> Self {
        let mut p = ZPoly { c };
        p.trim();
        p
    }

    pub fn constant(s: S) -> Self {
        Self::from_coeffs(vec![s])
    }

    /// `s * z^k`
    pub fn monomial(s: S, k: usize) -> Self {
        let mut c = vec![S::zero(); k + 1];
        c[k] = s;
        Self::from_coeffs(c)
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(S::unit(), 1)
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> S {
        self.c.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.c.last()
    }

    pub fn eval(&self, z: &S) -> S {
        self.c
            .iter()
            .rev()
            .fold(S::zero(), |acc, a| acc * z.clone() + a.clone())
    }

    pub fn eval_c64(&self, z: C64) -> C64 {
        self.c
            .iter()
            .rev()
            .fold(C64::zero(), |acc, a| acc * z + a.to_c64())
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a.clone() * S::from_i64(k as i64))
            .collect();
        Self::from_coeffs(c)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ZPoly<T> {
        ZPoly::from_coeffs(self.c.iter().map(f).collect())
    }

    pub fn to_c64(&self) -> ZPoly<C64> {
        self.map(|a| a.to_c64())
    }

    /// Largest coefficient deviation, for reports.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.c.len().max(other.c.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).modulus())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> Zero for ZPoly<S> {
    fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<S: Scalar> Add for ZPoly<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (mut long, short) = if self.c.len() >= o.c.len() {
            (self.c, o.c)
        } else {
            (o.c, self.c)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Self::from_coeffs(long)
    }
}

impl<S: Scalar> Neg for ZPoly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        ZPoly {
            c: self.c.into_iter().map(|a| -a).collect(),
        }
    }
}

impl<S: Scalar> Sub for ZPoly<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<S: Scalar> Mul for ZPoly<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.c.is_empty() || o.c.is_empty() {
            return Self::zero();
        }
        let mut c = vec![S::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(c)
    }
}

impl<S: Scalar> Ring for ZPoly<S> {
    fn unit() -> Self {
        Self::constant(S::unit())
    }

    fn from_int(k: i64) -> Self {
        Self::constant(S::from_i64(k))
    }

    fn approx_eq(&self, other: &Self) -> bool {
        let n = self.c.len().max(other.c.len());
        (0..n).all(|k| self.coeff(k).approx_eq(&other.coeff(k)))
    }
}

impl<S: Scalar> Module<S> for ZPoly<S> {
    fn scale(&self, s: &S) -> Self {
        Self::from_coeffs(self.c.iter().map(|a| a.clone() * s.clone()).collect())
    }

    fn from_scalar(s: S) -> Self {
        Self::constant(s)
    }
}
