//! Truncated power series in a single variable (normally the nome q).

use super::scalar::{Module, Ring, Scalar, C64};
use crate::error::{HeunError, Result};

/// Coefficients `c_0..=c_N`; every operation keeps exactly `N + 1` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<C> {
    c: Vec<C>,
}

impl<C: Ring> QSeries<C> {
    pub fn zero(order: usize) -> Self {
        QSeries {
            c: vec![C::zero(); order + 1],
        }
    }

    pub fn unit(order: usize) -> Self {
        Self::constant(C::unit(), order)
    }

    pub fn constant(c0: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.c[0] = c0;
        s
    }

    /// `a q^k`, or zero when `k` exceeds the order.
    pub fn monomial(a: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.c[k] = a;
        }
        s
    }

    /// Pads with zeros or drops coefficients beyond `order`.
    pub fn from_coeffs(mut c: Vec<C>, order: usize) -> Self {
        c.resize(order + 1, C::zero());
        QSeries { c }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.c
    }

    pub fn set(&mut self, k: usize, a: C) {
        self.c[k] = a;
    }

    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.order() == o.order() {
            Ok(())
        } else {
            Err(HeunError::OrderMismatch(self.order(), o.order()))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(QSeries {
            c: self
                .c
                .iter()
                .zip(&o.c)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(QSeries {
            c: self
                .c
                .iter()
                .zip(&o.c)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        QSeries {
            c: self.c.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.order();
        let mut c = vec![C::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(QSeries { c })
    }

    /// Multiply every coefficient by a ring element.
    pub fn mul_coeff(&self, a: &C) -> Self {
        QSeries {
            c: self.c.iter().map(|x| x.clone() * a.clone()).collect(),
        }
    }

    /// `q d/dq`: the coefficient of `q^l` is multiplied by `l`.
    pub fn q_derivative(&self) -> Self {
        QSeries {
            c: self
                .c
                .iter()
                .enumerate()
                .map(|(l, a)| a.clone() * C::from_int(l as i64))
                .collect(),
        }
    }

    /// Multiplication by `q^k`, dropping what falls beyond the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut s = Self::zero(n);
        for i in 0..=n {
            if i + k > n {
                break;
            }
            s.c[i + k] = self.c[i].clone();
        }
        s
    }

    /// Re-truncate (or zero-extend) to another order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(self.c.clone(), order)
    }

    pub fn approx_eq(&self, o: &Self) -> bool {
        self.order() == o.order() && self.c.iter().zip(&o.c).all(|(a, b)| a.approx_eq(b))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries {
            c: self.c.iter().map(f).collect(),
        }
    }

    /// `sum_k binom(a,k) u^k` for `self = 1 + u`.
    pub fn unit_pow<S: Scalar>(&self, a: &S) -> Result<Self>
    where
        C: Module<S>,
    {
        if !self.c[0].is_unit_value() {
            return Err(HeunError::NotUnitForm);
        }
        let n = self.order();
        let mut u = self.clone();
        u.c[0] = C::zero();
        let mut acc = Self::unit(n);
        let mut upow = Self::unit(n);
        let mut binom = S::unit();
        for k in 1..=n {
            upow = upow.try_mul(&u)?;
            if upow.is_zero() {
                break;
            }
            binom = next_binomial(&binom, a, k);
            acc = acc.try_add(&upow.scale(&binom))?;
        }
        Ok(acc)
    }

    pub fn scale<S: Scalar>(&self, s: &S) -> Self
    where
        C: Module<S>,
    {
        QSeries {
            c: self.c.iter().map(|x| x.scale(s)).collect(),
        }
    }
}

impl<S: Scalar> QSeries<S> {
    /// Multiplicative inverse; the constant term must be a unit.
    pub fn try_inv(&self) -> Result<Self> {
        let b0 = self.c[0].try_inv().map_err(|_| HeunError::NonUnit)?;
        let n = self.order();
        let mut b = vec![S::zero(); n + 1];
        b[0] = b0.clone();
        for k in 1..=n {
            let mut s = S::zero();
            for j in 1..=k {
                if !self.c[j].is_zero() {
                    s = s + self.c[j].clone() * b[k - j].clone();
                }
            }
            b[k] = -(s * b0.clone());
        }
        Ok(QSeries { c: b })
    }

    pub fn eval(&self, q: C64) -> C64 {
        self.c
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, a| acc * q + a.to_c64())
    }

    pub fn to_c64(&self) -> QSeries<C64> {
        self.map(|a| a.to_c64())
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        self.c
            .iter()
            .zip(&o.c)
            .map(|(a, b)| (a.clone() - b.clone()).modulus())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> QSeries<super::ZPoly<S>> {
    pub fn eval_c64(&self, z: C64, q: C64) -> C64 {
        self.c
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, p| acc * q + p.eval_c64(z))
    }
}

fn next_binomial<S: Scalar>(prev: &S, a: &S, k: usize) -> S {
    prev.clone() * (a.clone() - S::from_i64(k as i64 - 1)) * S::from_ratio(1, k as i64)
}

/// `binom(a, k) = a (a-1) ... (a-k+1) / k!`
pub fn binomial<S: Scalar>(a: &S, k: usize) -> S {
    (1..=k).fold(S::unit(), |acc, j| next_binomial(&acc, a, j))
}

/// Rising factorial `(x)_n`, extended to negative `n` by
/// `(x)_{-k} = 1 / ((x-1)(x-2)...(x-k))`.
pub fn pochhammer<S: Scalar>(x: &S, n: i64) -> Result<S> {
    if n >= 0 {
        Ok((0..n).fold(S::unit(), |acc, j| acc * (x.clone() + S::from_i64(j))))
    } else {
        let mut d = S::unit();
        for j in 1..=(-n) {
            let f = x.clone() - S::from_i64(j);
            if f.is_zero() || f.try_inv().is_err() {
                return Err(HeunError::PochhammerPole(format!("{:?}", x), n));
            }
            d = d * f;
        }
        d.try_inv()
            .map_err(|_| HeunError::PochhammerPole(format!("{:?}", x), n))
    }
}

pub fn qs_mul<C: Ring>(a: &QSeries<C>, b: &QSeries<C>) -> Result<QSeries<C>> {
    a.try_mul(b)
}

pub fn qs_inv<S: Scalar>(a: &QSeries<S>) -> Result<QSeries<S>> {
    a.try_inv()
}

/// Expansion of `1 / (b - e)` for a series `e` without constant term.
pub fn resolvent<S: Scalar>(b: &S, e: &QSeries<S>) -> Result<QSeries<S>> {
    if !e.c[0].is_zero() {
        return Err(HeunError::NonPositiveValuation);
    }
    let binv = b
        .try_inv()
        .map_err(|_| HeunError::DivisionByZero(format!("resolvent denominator {:?}", b)))?;
    let n = e.order();
    let mut x = vec![S::zero(); n + 1];
    x[0] = binv.clone();
    for k in 1..=n {
        let mut s = S::zero();
        for j in 1..=k {
            if !e.c[j].is_zero() {
                s = s + e.c[j].clone() * x[k - j].clone();
            }
        }
        x[k] = s * binv.clone();
    }
    Ok(QSeries { c: x })
}

pub fn unit_pow<C: Module<S>, S: Scalar>(f: &QSeries<C>, a: &S) -> Result<QSeries<C>> {
    f.unit_pow(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seriescore::Rational;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    fn s(c: &[(i64, i64)], n: usize) -> QSeries<Rational> {
        QSeries::from_coeffs(c.iter().map(|&(p, q)| r(p, q)).collect(), n)
    }

    #[test]
    fn mul_examples() {
        let one = QSeries::<Rational>::unit(3);
        assert_eq!(qs_mul(&one, &one).unwrap(), one);
        let a = s(&[(1, 1), (1, 1)], 2);
        let b = s(&[(1, 1), (-1, 1)], 2);
        assert_eq!(qs_mul(&a, &b).unwrap(), s(&[(1, 1), (0, 1), (-1, 1)], 2));
        let a = s(&[(1, 1), (2, 1), (3, 1)], 2);
        let b = s(&[(1, 1), (1, 1)], 2);
        assert_eq!(qs_mul(&a, &b).unwrap(), s(&[(1, 1), (3, 1), (5, 1)], 2));
    }

    #[test]
    fn mismatched_orders_rejected() {
        let a = QSeries::<Rational>::unit(2);
        let b = QSeries::<Rational>::unit(3);
        assert!(matches!(qs_mul(&a, &b), Err(HeunError::OrderMismatch(2, 3))));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            qs_inv(&QSeries::<Rational>::unit(4)).unwrap(),
            QSeries::unit(4)
        );
        let a = s(&[(1, 1), (0, 1), (-1, 1)], 4);
        assert_eq!(
            qs_inv(&a).unwrap(),
            s(&[(1, 1), (0, 1), (1, 1), (0, 1), (1, 1)], 4)
        );
        let a = s(&[(2, 1), (-1, 1)], 2);
        assert_eq!(qs_inv(&a).unwrap(), s(&[(1, 2), (1, 4), (1, 8)], 2));
        assert!(matches!(
            qs_inv(&s(&[(0, 1), (1, 1)], 2)),
            Err(HeunError::NonUnit)
        ));
    }

    #[test]
    fn resolvent_examples() {
        let z = QSeries::<Rational>::zero(2);
        assert_eq!(resolvent(&r(3, 1), &z).unwrap(), s(&[(1, 3)], 2));
        let e = s(&[(0, 1), (1, 1)], 2);
        assert_eq!(resolvent(&r(2, 1), &e).unwrap(), s(&[(1, 2), (1, 4), (1, 8)], 2));
        let e = s(&[(0, 1), (1, 1), (1, 1)], 2);
        assert_eq!(resolvent(&r(1, 1), &e).unwrap(), s(&[(1, 1), (1, 1), (2, 1)], 2));
        assert!(resolvent(&r(0, 1), &e).is_err());
        assert!(resolvent(&r(1, 1), &s(&[(1, 1)], 2)).is_err());
    }

    #[test]
    fn unit_pow_examples() {
        let f = s(&[(1, 1), (3, 1), (-2, 1)], 2);
        assert_eq!(unit_pow(&f, &r(1, 1)).unwrap(), f);
        let f = s(&[(1, 1), (1, 1)], 2);
        assert_eq!(unit_pow(&f, &r(-1, 1)).unwrap(), s(&[(1, 1), (-1, 1), (1, 1)], 2));
        let f = s(&[(1, 1), (-1, 1)], 2);
        assert_eq!(unit_pow(&f, &r(1, 2)).unwrap(), s(&[(1, 1), (-1, 2), (-1, 8)], 2));
        assert!(matches!(
            unit_pow(&s(&[(2, 1)], 2), &r(1, 2)),
            Err(HeunError::NotUnitForm)
        ));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&r(7, 3), 0).unwrap(), r(1, 1));
        assert_eq!(pochhammer(&r(3, 1), 2).unwrap(), r(12, 1));
        assert_eq!(pochhammer(&r(2, 1), -1).unwrap(), r(1, 1));
        assert_eq!(pochhammer(&r(5, 2), -2).unwrap(), r(4, 3));
        assert!(matches!(
            pochhammer(&r(2, 1), -2),
            Err(HeunError::PochhammerPole(..))
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(&r(1, 2), 1), r(1, 2));
        assert_eq!(binomial(&r(1, 2), 2), r(-1, 8));
        assert_eq!(binomial(&r(5, 1), 2), r(10, 1));
        assert_eq!(binomial(&r(5, 1), 7), r(0, 1));
    }

    #[test]
    fn q_derivative_scales_by_order() {
        let a = s(&[(1, 1), (1, 1), (1, 1)], 2);
        assert_eq!(a.q_derivative(), s(&[(0, 1), (1, 1), (2, 1)], 2));
    }
}
