//! Non-stationary case (`kappa != 0`): coefficients as explicit finite sums
//! over step sequences.
//!
//! A path starts at offset `m - n` with budget `l` and ends at `(0, 0)`. A free
//! step (`k = 0`) moves up by `mu > 0` with weight `mu gamma_0^mu`; a paid step
//! moves by any `mu != 0` with weight `|mu| gamma_k^mu` and spends `|mu| k` of
//! the budget. Every state visited before the end contributes `1/b^{(r)}(pos)`
//! with `r` the remaining budget. States with `pos > r` carry no weight.

use super::couplings::Couplings;
use super::recursion::{check_params, warn_if_unprotected};
use super::resonance::ResonanceReport;
use super::table::{CoeffTable, Normalization};
use crate::error::{HeunError, Result};
use crate::exec::{par_map, Execution};
use crate::params::Params;
use crate::seriescore::{QSeries, Scalar};
use std::collections::HashMap;

struct Paths<'a, S> {
    c: &'a Couplings<S>,
    n: i64,
    report: ResonanceReport,
    /// Suffix sums keyed by state; `None` enumerates every path separately.
    memo: Option<HashMap<(i64, usize), S>>,
}

impl<S: Scalar> Paths<'_, S> {
    fn walk(&mut self, pos: i64, r: usize) -> S {
        if let Some(v) = self.memo.as_ref().and_then(|m| m.get(&(pos, r))) {
            return v.clone();
        }
        let v = self.walk_from(pos, r);
        if let Some(m) = self.memo.as_mut() {
            m.insert((pos, r), v.clone());
        }
        v
    }

    fn walk_from(&mut self, pos: i64, r: usize) -> S {
        if pos == 0 && r == 0 {
            return S::unit();
        }
        if pos > r as i64 {
            return S::zero();
        }
        let b = self.c.b(r, pos);
        let Ok(binv) = b.try_inv().and_then(|x| {
            if b.is_resonant() {
                Err(HeunError::DivisionByZero(String::new()))
            } else {
                Ok(x)
            }
        }) else {
            self.report.push(r, self.n + pos);
            return S::zero();
        };
        let mut s = S::zero();
        for mu in 1..=(r as i64 - pos) {
            let w = self.c.step_weight(mu, 0);
            if !w.is_zero() {
                s = s + w * self.walk(pos + mu, r);
            }
        }
        for k in 1..=r {
            for a in 1..=(r / k) as i64 {
                let rest = r - a as usize * k;
                for mu in [a, -a] {
                    let w = self.c.step_weight(mu, k);
                    if !w.is_zero() {
                        s = s + w * self.walk(pos + mu, rest);
                    }
                }
            }
        }
        s * binv
    }
}

fn precheck<S: Scalar>(n: i64, params: &Params<S>) -> Result<Couplings<S>> {
    if params.kappa.is_resonant() {
        return Err(HeunError::pre("the path expansion needs kappa != 0"));
    }
    check_params(n, params)?;
    Ok(Couplings::from_params(params, n))
}

fn alpha_reduced<S: Scalar>(n: i64, m: i64, l: usize, c: &Couplings<S>, shared: bool) -> Result<S> {
    let mut p = Paths {
        c,
        n,
        report: ResonanceReport::new(n),
        memo: shared.then(HashMap::new),
    };
    let v = p.walk(m - n, l);
    if p.report.is_empty() {
        Ok(v)
    } else {
        Err(HeunError::Resonance(p.report))
    }
}

/// `alpha_n^{(l)}(m)` in the fixed-eigenvalue normalization, enumerating every
/// path on its own. The count grows exponentially with `l`.
pub fn thm2_alpha<S: Scalar>(n: i64, m: i64, l: usize, params: &Params<S>) -> Result<S> {
    let c = precheck(n, params)?;
    alpha_reduced(n, m, l, &c, false)
}

/// Full fixed-eigenvalue table by path enumeration; entries are independent
/// and are spread over `exec`. Paths sharing a suffix state are summed once.
pub fn thm2_table<S: Scalar>(
    n: i64,
    params: &Params<S>,
    order: usize,
    exec: Execution,
) -> Result<CoeffTable<S>> {
    let c = precheck(n, params)?;
    warn_if_unprotected(&c);
    let mut t = CoeffTable::zeros(n, order, Normalization::II, c.clone());
    let cells: Vec<(usize, i64)> = (0..=order)
        .flat_map(|l| {
            let (lo, hi) = t.window(l);
            (lo..=hi).map(move |m| (l, m))
        })
        .collect();
    let vals = par_map(exec, &cells, |&(l, m)| alpha_reduced(n, m, l, &c, true));
    let mut report = ResonanceReport::new(n);
    for ((l, m), v) in cells.into_iter().zip(vals) {
        match v {
            Ok(v) => t.set(l, m, v),
            Err(HeunError::Resonance(r)) => r.entries.into_iter().for_each(|(a, b)| report.push(a, b)),
            Err(e) => return Err(e),
        }
    }
    if report.is_empty() {
        Ok(t)
    } else {
        Err(HeunError::Resonance(report))
    }
}

/// The diagonal `alpha_n^{(l)}(n)`, `l <= order`, which fixes the eigenvalue to all orders.
pub fn thm2_diagonal<S: Scalar>(n: i64, params: &Params<S>, order: usize) -> Result<QSeries<S>> {
    let c = precheck(n, params)?;
    let v = (0..=order)
        .map(|l| alpha_reduced(n, n, l, &c, true))
        .collect::<Result<Vec<_>>>()?;
    Ok(QSeries::from_coeffs(v, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{alg1, alg2, all_orders_eigen};
    use crate::seriescore::{Rational, C64};

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    fn generic() -> Params<Rational> {
        Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(2, 9))
    }

    #[test]
    fn empty_path() {
        assert_eq!(thm2_alpha(2, 2, 0, &generic()).unwrap(), r(1, 1));
        assert_eq!(thm2_alpha(2, 3, 0, &generic()).unwrap(), r(0, 1));
    }

    #[test]
    fn matches_recursion() {
        let p = generic();
        for n in [-1, 0, 2] {
            let t2 = alg2(n, &p, 3).unwrap();
            for exec in [Execution::Sequential, Execution::Parallel] {
                let t = thm2_table(n, &p, 3, exec).unwrap();
                assert_eq!(t, t2, "n={n}");
            }
        }
    }

    #[test]
    fn plain_enumeration_matches_shared_suffixes() {
        let p = generic();
        let t = thm2_table(1, &p, 3, Execution::Sequential).unwrap();
        for (l, m, v) in t.entries() {
            assert_eq!(&thm2_alpha(1, m, l, &p).unwrap(), v);
        }
    }

    #[test]
    fn all_orders_formula_converges() {
        let p = generic();
        let n = 1;
        let (_, e1) = alg1(n, &p, 4).unwrap();
        let d = thm2_diagonal(n, &p, 4).unwrap();
        for q in [0.05, 0.02] {
            let q = C64::new(q, 0.0);
            let v = all_orders_eigen(&d, &p.kappa, &p.e0(n), q);
            assert!((v - e1.series.eval(q)).norm() < 50.0 * q.norm().powi(5));
        }
    }

    #[test]
    fn rejects_zero_kappa() {
        let p = Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(0, 1));
        assert!(thm2_alpha(1, 0, 1, &p).is_err());
    }
}
