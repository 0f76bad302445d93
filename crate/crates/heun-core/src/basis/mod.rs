//! Basis functions `f_m^{(l)}(z)`: the coefficients of `xi^m q^l` in
//!
//! ```text
//! prod_nu Theta_{nu+1}(xi)^{g~_nu} / Theta(z, xi)^lambda
//! ```
//!
//! The `q = 0` part is `(1 - xi)^{g~0} (1 + xi)^{g~1} (1 - 2 z xi + xi^2)^{-lambda}`,
//! handled with the Gegenbauer generating function. Every remaining factor is
//! `1 + O(q)` and each power of `q` moves the `xi` degree by at most one, so
//! that product only needs the window `[-N, N]` to be exact through `q^N`.

mod contour;

pub use contour::{f_contour, ContourConfig};

use crate::error::Result;
use crate::params::Params;
use crate::seriescore::{binomial, LaurentXi, Module, QSeries, Ring, Scalar, ZPoly, C64};
use crate::specfun::gegenbauer_explicit;
use num_traits::Zero;

/// `f_m^{(l)}` for `m` in a window, as q-series of polynomials.
#[derive(Clone, Debug)]
pub struct BasisTable<S> {
    lo: i64,
    hi: i64,
    order: usize,
    params: Params<S>,
    funcs: Vec<QSeries<ZPoly<S>>>,
}

impl<S: Scalar> BasisTable<S> {
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn params(&self) -> &Params<S> {
        &self.params
    }

    /// `sum_l f_m^{(l)} q^l`; `None` outside the window.
    pub fn series(&self, m: i64) -> Option<&QSeries<ZPoly<S>>> {
        (m >= self.lo && m <= self.hi).then(|| &self.funcs[(m - self.lo) as usize])
    }

    /// `f_m^{(l)}`; panics outside the computed range.
    pub fn coeff(&self, m: i64, l: usize) -> &ZPoly<S> {
        self.series(m)
            .unwrap_or_else(|| panic!("f_{m} outside the basis window [{}, {}]", self.lo, self.hi))
            .coeff(l)
    }

    /// Truncated `f_m(z; q)`.
    pub fn eval(&self, m: i64, z: C64, q: C64) -> Option<C64> {
        self.series(m).map(|s| s.eval_c64(z, q))
    }
}

/// Coefficients of `(1 - xi)^{a} (1 + xi)^{b}` up to `xi^k`.
fn numerator_coeffs<S: Scalar>(a: &S, b: &S, k: usize) -> Vec<S> {
    let pa: Vec<S> = (0..=k)
        .map(|i| {
            let s = if i % 2 == 0 { S::unit() } else { -S::unit() };
            binomial(a, i) * s
        })
        .collect();
    let pb: Vec<S> = (0..=k).map(|i| binomial(b, i)).collect();
    (0..=k)
        .map(|i| {
            (0..=i).fold(S::zero(), |acc, j| acc + pa[j].clone() * pb[i - j].clone())
        })
        .collect()
}

/// `f_m^{(0)}` for `0 <= m <= mmax` from the Gegenbauer expansion.
fn q0_slice<S: Scalar>(params: &Params<S>, mmax: usize) -> Vec<ZPoly<S>> {
    let gt = params.gt();
    let lam = params.lambda();
    let num = numerator_coeffs(&gt[0], &gt[1], mmax);
    let geg: Vec<ZPoly<S>> = (0..=mmax).map(|j| gegenbauer_explicit(j, &lam)).collect();
    (0..=mmax)
        .map(|m| {
            (0..=m).fold(ZPoly::zero(), |acc, i| {
                if num[i].is_zero() {
                    acc
                } else {
                    acc + geg[m - i].scale(&num[i])
                }
            })
        })
        .collect()
}

/// `(1 + c q^k xi^e)^a` as a Laurent window.
fn linear_factor<S: Scalar>(c: S, k: usize, e: i64, a: &S, order: usize) -> Result<LaurentXi<S>> {
    let w = order as i64;
    let base = LaurentXi::from_monomials(
        -w,
        w,
        order,
        [(0, 0, ZPoly::unit()), (e, k, ZPoly::constant(c))],
    )?;
    base.unit_pow(a)
}

/// `(1 - 2 q^k xi^e z + q^{2k} xi^{2e})^a` as a Laurent window.
fn quadratic_factor<S: Scalar>(k: usize, e: i64, a: &S, order: usize) -> Result<LaurentXi<S>> {
    let w = order as i64;
    let base = LaurentXi::from_monomials(
        -w,
        w,
        order,
        [
            (0, 0, ZPoly::unit()),
            (e, k, ZPoly::monomial(S::from_i64(-2), 1)),
            (2 * e, 2 * k, ZPoly::unit()),
        ],
    )?;
    base.unit_pow(a)
}

/// The `q`-carrying part of the generating function, `1 + O(q)`.
fn q_factors<S: Scalar>(params: &Params<S>, order: usize) -> Result<LaurentXi<S>> {
    let gt = params.gt();
    let neg_lam = -params.lambda();
    let w = order as i64;
    let mut acc = LaurentXi::unit(-w, w, order)?;
    let mut mul = |f: LaurentXi<S>| -> Result<()> {
        acc = acc.mul(&f)?;
        Ok(())
    };
    for k in 1..=order {
        // (gt index, sign) for the linear factors carrying q^k
        let lin = if k % 2 == 0 { [(0, -1), (1, 1)] } else { [(3, -1), (2, 1)] };
        for (nu, sign) in lin {
            if gt[nu].is_zero() {
                continue;
            }
            for e in [1, -1] {
                mul(linear_factor(S::from_i64(sign), k, e, &gt[nu], order)?)?;
            }
        }
        if k % 2 == 0 && !neg_lam.is_zero() {
            for e in [1, -1] {
                mul(quadratic_factor(k, e, &neg_lam, order)?)?;
            }
        }
    }
    acc.ensure_unclipped()?;
    Ok(acc)
}

/// Basis functions for `m` in `[m_lo, m_hi]` through `q^order`.
pub fn f_table<S: Scalar>(
    params: &Params<S>,
    order: usize,
    m_lo: i64,
    m_hi: i64,
) -> Result<BasisTable<S>> {
    if m_lo > m_hi {
        return Err(crate::error::HeunError::pre(format!(
            "empty basis window [{m_lo}, {m_hi}]"
        )));
    }
    let w = order as i64;
    let top = (m_hi + w).max(0) as usize;
    let f0 = q0_slice(params, top);
    let b = q_factors(params, order)?;
    let bterms: Vec<(i64, QSeries<ZPoly<S>>)> = (-w..=w)
        .map(|e| (e, b.term(e)))
        .filter(|(_, t)| !t.is_zero())
        .collect();
    let funcs = (m_lo..=m_hi)
        .map(|m| {
            let mut acc = QSeries::zero(order);
            for (e, t) in &bterms {
                let j = m - e;
                if j < 0 || f0[j as usize].is_zero() {
                    continue;
                }
                let p = &f0[j as usize];
                let term = t.map(|c| c.clone() * p.clone());
                acc = acc.try_add(&term).expect("orders agree");
            }
            acc
        })
        .collect();
    Ok(BasisTable {
        lo: m_lo,
        hi: m_hi,
        order,
        params: params.clone(),
        funcs,
    })
}

/// `f_m^{(0)}` from the explicit triple sum over `(nu1, nu2, k)` with
/// `nu0 = m + k - nu1 - 2 nu2 >= 0` and `k <= nu2`.
pub fn f0_closed<S: Scalar>(m: i64, params: &Params<S>) -> ZPoly<S> {
    if m < 0 {
        return ZPoly::zero();
    }
    let gt = params.gt();
    let neg_lam = -params.lambda();
    let mu = m as usize;
    let mut c = vec![S::zero(); mu + 1];
    for nu1 in 0..=mu {
        for nu2 in 0..=mu {
            for k in 0..=nu2 {
                let nu0 = m + k as i64 - nu1 as i64 - 2 * nu2 as i64;
                if nu0 < 0 {
                    continue;
                }
                let sign0 = if nu0 % 2 == 0 { 1 } else { -1 };
                let sign_k = if k % 2 == 0 { 1 } else { -1 };
                let w = binomial(&gt[0], nu0 as usize)
                    * binomial(&gt[1], nu1)
                    * binomial(&neg_lam, nu2)
                    * binomial(&S::from_i64(nu2 as i64), k)
                    * S::from_i64(sign0 * sign_k)
                    * S::from_i64(2).pow_u(k as u32);
                c[k] = c[k].clone() + w;
            }
        }
    }
    ZPoly::from_coeffs(c)
}
