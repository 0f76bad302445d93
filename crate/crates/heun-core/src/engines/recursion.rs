//! The two order-by-order recursions.
//!
//! At order `l` the coefficient `alpha^{(l)}(m)` is fixed by
//!
//! ```text
//! b^{(l)}(m-n) alpha^{(l)}(m) = sum_{l'=1}^{l} E^{(l')} alpha^{(l-l')}(m)
//!     + sum_{mu>=1} mu gamma_0^mu alpha^{(l)}(m+mu)
//!     + sum_{l'<l} sum_{mu,k>=1, l'+k mu = l} mu gamma_k^mu [alpha^{(l')}(m+mu) + alpha^{(l')}(m-mu)]
//! ```
//!
//! The eigenvalue-carrying variant ([`alg1`]) pins `alpha^{(l>=1)}(n) = 0` and reads
//! `E^{(l)}` off the `m = n` equation. The other ([`alg2`]) keeps `E = E^{(0)}`
//! and solves the `m = n` equation with denominator `-kappa l` instead.
//!
//! At `kappa = 0` a vanishing denominator is a resonance only if its
//! right-hand side is nonzero. When both vanish the coefficient is set to
//! zero, the limit along the family of couplings that keeps the right-hand
//! side zero (for instance `g0 = g1`, where every odd `gamma_0^mu` drops out).
//! For `kappa != 0` the same 0/0 leaves a free parameter whose value depends
//! on the normalization, so it is always reported.

use super::couplings::Couplings;
use super::resonance::ResonanceReport;
use super::table::{window_lo, CoeffTable, EigenSeries, Normalization};
use crate::error::{HeunError, Result};
use crate::params::Params;
use crate::seriescore::{QSeries, Scalar};

/// Conditions on `lambda` and `g0 + g1` shared by all engines.
pub fn check_params<S: Scalar>(n: i64, params: &Params<S>) -> Result<()> {
    if n > 0 && params.neg_lambda_natural() {
        return Err(HeunError::pre("-lambda is a non-negative integer while n > 0"));
    }
    if n < 0 && params.neg_g01_natural() {
        return Err(HeunError::pre("-(g0 + g1) is a non-negative integer while n < 0"));
    }
    Ok(())
}

/// Log a notice when the couplings sit outside the regimes where vanishing
/// denominators are excluded a priori (complex kappa with real `g0+g1`, or
/// kappa = 0 with non-integer `g0+g1`).
pub(crate) fn warn_if_unprotected<S: Scalar>(c: &Couplings<S>) {
    let p = c.p.to_c64();
    let k = c.kappa.to_c64();
    let tol = 1e-14;
    let protected = if k.norm() <= tol {
        c.p.as_integer().is_none()
    } else {
        k.im.abs() > tol && p.im.abs() <= tol
    };
    if !protected {
        log::info!(
            "couplings outside the no-resonance regime (P = {p}, kappa = {k}); \
             vanishing denominators are checked as they arise"
        );
    }
}

/// Every `(l, k = m - n)` whose denominator the recursion divides by.
fn needed_denominators(n: i64, order: usize, include_diagonal: bool) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for l in 0..=order {
        let klo = window_lo(n, order, l) - n;
        for k in klo..=l as i64 {
            if k != 0 || (include_diagonal && l > 0) {
                out.push((l, k));
            }
        }
    }
    out
}

pub(crate) fn scan<S: Scalar>(
    n: i64,
    c: &Couplings<S>,
    order: usize,
    include_diagonal: bool,
) -> Result<()> {
    let mut report = ResonanceReport::new(n);
    for (l, k) in needed_denominators(n, order, include_diagonal) {
        if c.b(l, k).is_resonant() {
            report.push(l, n + k);
        }
    }
    if report.is_empty() {
        Ok(())
    } else {
        Err(HeunError::Resonance(report))
    }
}

/// `(l', mu, k)` with `l' + k mu = l`, `l' < l`, `mu, k >= 1`.
fn coupling_terms(l: usize) -> Vec<(usize, i64, usize)> {
    let mut out = Vec::new();
    for lp in 0..l {
        let d = l - lp;
        for mu in 1..=d {
            let kmax = d / mu;
            for k in 1..=kmax {
                if lp + k * mu == l {
                    out.push((lp, mu as i64, k));
                }
            }
        }
    }
    out
}

struct Recursion<'a, S> {
    n: i64,
    c: &'a Couplings<S>,
    table: CoeffTable<S>,
    eigen: Vec<S>,
    with_eigen: bool,
    report: ResonanceReport,
}

impl<S: Scalar> Recursion<'_, S> {
    /// Right-hand side at `(l, m)` without the term `E^{(l)} alpha^{(0)}(m)` when `skip_top`.
    fn rhs(&self, l: usize, m: i64, terms: &[(usize, i64, usize)], skip_top: bool) -> S {
        let t = &self.table;
        let mut s = S::zero();
        if self.with_eigen {
            for lp in 1..=l {
                if lp == l && skip_top {
                    continue;
                }
                let a = t.value(l - lp, m);
                if !a.is_zero() {
                    s = s + self.eigen[lp].clone() * a;
                }
            }
        }
        let top = self.n + l as i64;
        for mu in 1..=(top - m) {
            let a = t.value(l, m + mu);
            if !a.is_zero() {
                s = s + S::from_i64(mu) * self.c.gamma_coeff(0, mu) * a;
            }
        }
        for &(lp, mu, k) in terms {
            let a = t.value(lp, m + mu) + t.value(lp, m - mu);
            if !a.is_zero() {
                s = s + S::from_i64(mu) * self.c.gamma_coeff(k, mu) * a;
            }
        }
        s
    }

    fn solve(&mut self, l: usize, m: i64, terms: &[(usize, i64, usize)]) -> Result<()> {
        let b = self.c.b(l, m - self.n);
        let rhs = self.rhs(l, m, terms, false);
        let v = if b.is_resonant() {
            if !(rhs.is_resonant() && self.c.kappa.is_resonant()) {
                self.report.push(l, m);
            }
            S::zero()
        } else {
            rhs.try_div(&b)?
        };
        self.table.set(l, m, v);
        Ok(())
    }

    fn run(&mut self, order: usize) -> Result<()> {
        let n = self.n;
        for l in 0..=order {
            let terms = coupling_terms(l);
            let lo = window_lo(n, order, l);
            for m in ((n + 1)..=(n + l as i64)).rev() {
                self.solve(l, m, &terms)?;
            }
            if l == 0 {
                self.table.set(0, n, S::unit());
            } else if self.with_eigen {
                // alpha^{(l)}(n) = 0, so the m = n equation determines E^{(l)}
                let e = -self.rhs(l, n, &terms, true);
                self.eigen[l] = e;
            } else {
                self.solve(l, n, &terms)?;
            }
            for m in (lo..n).rev() {
                self.solve(l, m, &terms)?;
            }
        }
        if self.report.is_empty() {
            Ok(())
        } else {
            Err(HeunError::Resonance(std::mem::take(&mut self.report)))
        }
    }
}

/// Eigenvalue-carrying recursion on reduced couplings.
pub fn alg1_reduced<S: Scalar>(
    n: i64,
    c: &Couplings<S>,
    order: usize,
) -> Result<(CoeffTable<S>, EigenSeries<S>)> {
    warn_if_unprotected(c);
    let mut eigen = vec![S::zero(); order + 1];
    eigen[0] = c.e0();
    let mut r = Recursion {
        n,
        c,
        table: CoeffTable::zeros(n, order, Normalization::I, c.clone()),
        eigen,
        with_eigen: true,
        report: ResonanceReport::new(n),
    };
    r.run(order)?;
    let e = EigenSeries::new(QSeries::from_coeffs(r.eigen, order));
    Ok((r.table, e))
}

/// Recursion with the eigenvalue fixed at `E^{(0)}`, on reduced couplings.
pub fn alg2_reduced<S: Scalar>(n: i64, c: &Couplings<S>, order: usize) -> Result<CoeffTable<S>> {
    if c.kappa.is_resonant() {
        return Err(HeunError::pre("the fixed-eigenvalue recursion needs kappa != 0"));
    }
    warn_if_unprotected(c);
    let mut r = Recursion {
        n,
        c,
        table: CoeffTable::zeros(n, order, Normalization::II, c.clone()),
        eigen: vec![S::zero(); order + 1],
        with_eigen: false,
        report: ResonanceReport::new(n),
    };
    r.run(order)?;
    Ok(r.table)
}

/// Coefficients and eigenvalue series with `alpha^{(l>=1)}(n) = 0`.
pub fn alg1<S: Scalar>(
    n: i64,
    params: &Params<S>,
    order: usize,
) -> Result<(CoeffTable<S>, EigenSeries<S>)> {
    check_params(n, params)?;
    alg1_reduced(n, &Couplings::from_params(params, n), order)
}

/// Coefficients with the eigenvalue held at `E^{(0)}`; requires `kappa != 0`.
pub fn alg2<S: Scalar>(n: i64, params: &Params<S>, order: usize) -> Result<CoeffTable<S>> {
    check_params(n, params)?;
    alg2_reduced(n, &Couplings::from_params(params, n), order)
}
