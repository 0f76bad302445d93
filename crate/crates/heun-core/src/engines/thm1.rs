//! Stationary case (`kappa = 0`): the eigenvalue shift `E~ = E - E^{(0)}` as the
//! fixed point of `Phi(E~) = -sum_mu S_mu G(E~; mu)`.
//!
//! `G(E~; k)` is the weighted sum over walks on the integers from `k` to `0`
//! where every visit to a site `k' != 0` costs `1/(b^{(0)}(k') - E~)` and a step
//! by `mu` costs `S_mu(q)`. Rather than enumerating walks we solve the linear
//! system they sum, `G(k) = R(k) sum_mu S_mu G(k + mu)`, by sweeps from the top
//! site down. Only positive steps carry a `q^0` part, so a downward sweep is
//! exact at leading order and every further sweep gains one power of `q`.

use super::couplings::Couplings;
use super::recursion::{check_params, scan, warn_if_unprotected};
use super::table::{window_lo, CoeffTable, EigenSeries, Normalization};
use crate::error::{HeunError, Result};
use crate::params::Params;
use crate::seriescore::{resolvent, QSeries, Scalar};

struct Walks<S> {
    klo: i64,
    khi: i64,
    order: usize,
    steps: Vec<(i64, QSeries<S>)>,
    b0: Vec<S>,
}

impl<S: Scalar> Walks<S> {
    fn new(c: &Couplings<S>, klo: i64, khi: i64, order: usize) -> Self {
        let span = (khi - klo) as usize;
        let steps = (-(order as i64)..=span as i64)
            .filter(|&mu| mu != 0)
            .map(|mu| (mu, c.step_series(mu, order)))
            .filter(|(_, s)| !s.is_zero())
            .collect();
        let b0 = (klo..=khi).map(|k| c.b(0, k)).collect();
        Walks {
            klo,
            khi,
            order,
            steps,
            b0,
        }
    }

    fn idx(&self, k: i64) -> usize {
        (k - self.klo) as usize
    }

    fn sum_steps(&self, g: &[QSeries<S>], k: i64) -> Result<QSeries<S>> {
        let mut acc = QSeries::zero(self.order);
        for (mu, s) in &self.steps {
            let t = k + mu;
            if t < self.klo || t > self.khi {
                continue;
            }
            let v = &g[self.idx(t)];
            if !v.is_zero() {
                acc = acc.try_add(&s.try_mul(v)?)?;
            }
        }
        Ok(acc)
    }

    /// One downward sweep at fixed `E~`.
    fn sweep(&self, g: &mut [QSeries<S>], res: &[Option<QSeries<S>>]) -> Result<()> {
        for k in (self.klo..=self.khi).rev() {
            if k == 0 {
                continue;
            }
            let r = res[self.idx(k)].as_ref().expect("resolvent at k != 0");
            g[self.idx(k)] = r.try_mul(&self.sum_steps(g, k)?)?;
        }
        Ok(())
    }

    fn resolvents(&self, e: &QSeries<S>) -> Result<Vec<Option<QSeries<S>>>> {
        (self.klo..=self.khi)
            .map(|k| {
                if k == 0 {
                    Ok(None)
                } else {
                    resolvent(&self.b0[self.idx(k)], e).map(Some)
                }
            })
            .collect()
    }

    /// One round: refresh resolvents, sweep, then apply `Phi`.
    fn round(&self, g: &mut [QSeries<S>], e: &QSeries<S>) -> Result<QSeries<S>> {
        let res = self.resolvents(e)?;
        self.sweep(g, &res)?;
        Ok(self.sum_steps(g, 0)?.neg())
    }
}

/// Eigenvalue series and coefficient table at `kappa = 0`.
pub fn thm1_eigen<S: Scalar>(
    n: i64,
    params: &Params<S>,
    order: usize,
) -> Result<(EigenSeries<S>, CoeffTable<S>)> {
    if !params.kappa.is_resonant() {
        return Err(HeunError::pre("the stationary fixed point needs kappa = 0"));
    }
    check_params(n, params)?;
    let mut c = Couplings::from_params(params, n);
    c.kappa = S::zero();
    thm1_reduced(n, &c, order)
}

pub fn thm1_reduced<S: Scalar>(
    n: i64,
    c: &Couplings<S>,
    order: usize,
) -> Result<(EigenSeries<S>, CoeffTable<S>)> {
    scan(n, c, order, false)?;
    warn_if_unprotected(c);
    let klo = window_lo(n, order, 0) - n;
    let khi = order as i64;
    let w = Walks::new(c, klo, khi, order);
    let mut g = vec![QSeries::zero(order); (khi - klo + 1) as usize];
    g[w.idx(0)] = QSeries::unit(order);
    let mut e = QSeries::zero(order);
    for _ in 0..=order {
        e = w.round(&mut g, &e)?;
    }
    let check = w.round(&mut g.clone(), &e)?;
    if check != e && !check.approx_eq(&e) {
        return Err(HeunError::NoConvergence(
            "stationary eigenvalue iteration is not idempotent".into(),
        ));
    }
    let mut t = CoeffTable::zeros(n, order, Normalization::I, c.clone());
    for l in 0..=order {
        let (lo, hi) = t.window(l);
        for m in lo..=hi {
            t.set(l, m, g[w.idx(m - n)].coeff(l).clone());
        }
    }
    let e = QSeries::constant(c.e0(), order).try_add(&e)?;
    Ok((EigenSeries::new(e), t))
}
