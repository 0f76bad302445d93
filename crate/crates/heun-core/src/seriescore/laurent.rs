//! Finite Laurent windows in ξ whose coefficients are q-series of z-polynomials.
//!
//! Products are clipped to a caller-chosen window. Any nonzero contribution
//! that lands outside it is remembered, so a caller can tell whether the
//! coefficients it extracts are exact.

use super::qseries::QSeries;
use super::scalar::{Module, Ring, Scalar};
use super::zpoly::ZPoly;
use crate::error::{HeunError, Result};
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct LaurentXi<S> {
    lo: i64,
    hi: i64,
    order: usize,
    terms: Vec<QSeries<ZPoly<S>>>,
    clipped: Option<(i64, usize)>,
}

impl<S: Scalar> LaurentXi<S> {
    pub fn zero(lo: i64, hi: i64, order: usize) -> Result<Self> {
        if lo > hi {
            return Err(HeunError::pre(format!("empty xi window [{lo}, {hi}]")));
        }
        Ok(LaurentXi {
            lo,
            hi,
            order,
            terms: vec![QSeries::zero(order); (hi - lo + 1) as usize],
            clipped: None,
        })
    }

    pub fn unit(lo: i64, hi: i64, order: usize) -> Result<Self> {
        let mut l = Self::zero(lo, hi, order)?;
        l.add_monomial(0, 0, ZPoly::unit());
        Ok(l)
    }

    /// Sum of monomials `p(z) q^k ξ^e` given as `(e, k, p)`.
    pub fn from_monomials(
        lo: i64,
        hi: i64,
        order: usize,
        monos: impl IntoIterator<Item = (i64, usize, ZPoly<S>)>,
    ) -> Result<Self> {
        let mut l = Self::zero(lo, hi, order)?;
        for (e, k, p) in monos {
            l.add_monomial(e, k, p);
        }
        Ok(l)
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// First clipped `(exponent, q-order)`, if any.
    pub fn clipped(&self) -> Option<(i64, usize)> {
        self.clipped
    }

    pub fn ensure_unclipped(&self) -> Result<()> {
        match self.clipped {
            None => Ok(()),
            Some((exp, order)) => Err(HeunError::WindowTooSmall { exp, order }),
        }
    }

    /// Coefficient of ξ^m; zero outside the window.
    pub fn term(&self, m: i64) -> QSeries<ZPoly<S>> {
        if m < self.lo || m > self.hi {
            QSeries::zero(self.order)
        } else {
            self.terms[(m - self.lo) as usize].clone()
        }
    }

    fn note_clip(&mut self, e: i64, s: &QSeries<ZPoly<S>>) {
        if self.clipped.is_none() {
            if let Some(k) = s.valuation() {
                self.clipped = Some((e, k));
            }
        }
    }

    pub fn add_monomial(&mut self, e: i64, k: usize, p: ZPoly<S>) {
        if k > self.order || p.is_zero() {
            return;
        }
        let mono = QSeries::monomial(p, k, self.order);
        self.add_term(e, &mono);
    }

    pub fn add_term(&mut self, e: i64, s: &QSeries<ZPoly<S>>) {
        if e < self.lo || e > self.hi {
            self.note_clip(e, s);
            return;
        }
        let i = (e - self.lo) as usize;
        self.terms[i] = self.terms[i].try_add(s).expect("orders agree by construction");
    }

    /// Product clipped to `[lo, hi]`.
    pub fn mul_into(&self, o: &Self, lo: i64, hi: i64) -> Result<Self> {
        if self.order != o.order {
            return Err(HeunError::OrderMismatch(self.order, o.order));
        }
        let mut out = Self::zero(lo, hi, self.order)?;
        out.clipped = self.clipped.or(o.clipped);
        let n = self.order;
        for (i, a) in self.terms.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.lo + i as i64;
            for (j, b) in o.terms.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = ea + o.lo + j as i64;
                let inside = e >= lo && e <= hi;
                if !inside && out.clipped.is_some() {
                    continue;
                }
                let mut prod = vec![ZPoly::zero(); n + 1];
                for (ka, pa) in a.coeffs().iter().enumerate() {
                    if pa.is_zero() {
                        continue;
                    }
                    for (kb, pb) in b.coeffs()[..=n - ka].iter().enumerate() {
                        if !pb.is_zero() {
                            prod[ka + kb] = prod[ka + kb].clone() + pa.clone() * pb.clone();
                        }
                    }
                }
                out.add_term(e, &QSeries::from_coeffs(prod, n));
            }
        }
        Ok(out)
    }

    /// Product clipped to this window.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.mul_into(o, self.lo, self.hi)
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            *t = t.scale(s);
        }
        out
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        if self.order != o.order {
            return Err(HeunError::OrderMismatch(self.order, o.order));
        }
        let mut out = self.clone();
        out.clipped = self.clipped.or(o.clipped);
        for (j, b) in o.terms.iter().enumerate() {
            if !b.is_zero() {
                out.add_term(o.lo + j as i64, b);
            }
        }
        Ok(out)
    }

    fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_zero())
    }

    /// `(1 + u)^a` where every term of `u` carries a positive power of q.
    pub fn unit_pow(&self, a: &S) -> Result<Self> {
        for (i, t) in self.terms.iter().enumerate() {
            let e = self.lo + i as i64;
            let c0 = t.coeff(0);
            let ok = if e == 0 { c0.is_unit_value() } else { c0.is_zero() };
            if !ok {
                return Err(HeunError::NotUnitForm);
            }
        }
        if self.lo > 0 || self.hi < 0 {
            return Err(HeunError::NotUnitForm);
        }
        let mut u = self.clone();
        let i0 = (-self.lo) as usize;
        u.terms[i0].set(0, ZPoly::zero());
        let mut acc = Self::unit(self.lo, self.hi, self.order)?;
        acc.clipped = self.clipped;
        let mut upow = acc.clone();
        let mut binom = S::unit();
        for k in 1..=self.order {
            upow = upow.mul(&u)?;
            if upow.is_zero() {
                break;
            }
            binom = binom * (a.clone() - S::from_i64(k as i64 - 1)) * S::from_ratio(1, k as i64);
            acc = acc.try_add(&upow.scale(&binom))?;
        }
        acc.clipped = acc.clipped.or(upow.clipped);
        Ok(acc)
    }
}

impl<S: Scalar> QSeries<ZPoly<S>> {
    /// Lift a scalar series to constant polynomials.
    pub fn from_scalar_series(s: &QSeries<S>) -> Self {
        s.map(|a| ZPoly::from_scalar(a.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seriescore::Rational;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    fn c(p: i64) -> ZPoly<Rational> {
        ZPoly::constant(r(p, 1))
    }

    #[test]
    fn geometric_factor_expansion() {
        // (1 - q xi)^(-1) = sum q^k xi^k
        let f = LaurentXi::from_monomials(-3, 3, 3, [(0, 0, c(1)), (1, 1, c(-1))]).unwrap();
        let g = f.unit_pow(&r(-1, 1)).unwrap();
        for k in 0..=3 {
            let t = g.term(k);
            assert_eq!(t.coeff(k as usize), &c(1));
            assert_eq!(t.valuation(), Some(k as usize));
        }
        assert!(g.clipped().is_none());
    }

    #[test]
    fn clipping_is_recorded() {
        let f = LaurentXi::from_monomials(-1, 1, 2, [(0, 0, c(1)), (1, 1, c(1))]).unwrap();
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.clipped(), Some((2, 2)));
        assert!(matches!(
            sq.ensure_unclipped(),
            Err(HeunError::WindowTooSmall { exp: 2, order: 2 })
        ));
        let wide = f.mul_into(&f, -2, 2).unwrap();
        assert!(wide.ensure_unclipped().is_ok());
        assert_eq!(wide.term(2).coeff(2), &c(1));
        assert_eq!(wide.term(1).coeff(1), &c(2));
    }

    #[test]
    fn reads_outside_window_are_zero() {
        let f = LaurentXi::<Rational>::unit(-1, 1, 2).unwrap();
        assert!(f.term(5).is_zero());
        assert_eq!(f.term(0).coeff(0), &c(1));
    }

    #[test]
    fn unit_pow_rejects_bad_constant() {
        let f = LaurentXi::from_monomials(-1, 1, 2, [(0, 0, c(2))]).unwrap();
        assert!(matches!(f.unit_pow(&r(1, 2)), Err(HeunError::NotUnitForm)));
        let f = LaurentXi::from_monomials(-1, 1, 2, [(0, 0, c(1)), (1, 0, c(1))]).unwrap();
        assert!(matches!(f.unit_pow(&r(1, 2)), Err(HeunError::NotUnitForm)));
    }
}
