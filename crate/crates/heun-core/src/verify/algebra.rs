//! Suites over exact algebraic identities between the engines and the
//! closed forms.

use super::oracles::LowOrder;
use super::sample::{show, Sampler};
use super::{deviation, job, run_jobs, tol_for, Case, Job, Report, VerifyConfig};
use crate::basis::f_table;
use crate::engines::{
    alg1, alg2, all_orders_eigen_series, bridge, thm1_eigen, thm2_alpha, thm2_diagonal, CoeffTable,
};
use crate::error::Result;
use crate::exec::Execution;
use crate::params::Params;
use crate::seriescore::{FromRational, Module, Rational, Scalar, ScalarMode, C64};
use crate::solution::{assemble, s4_check, Mode};
use crate::specfun::jacobi_poly;
use num_traits::Zero;

fn table_dev<S: Scalar>(a: &CoeffTable<S>, b: &CoeffTable<S>, upto: usize) -> f64 {
    let d = a.max_abs_diff(b, upto);
    if S::EXACT && !a.agrees_with(b, upto) {
        d.max(f64::MIN_POSITIVE)
    } else {
        d
    }
}

fn trig_case<S: FromRational>(n: i64, p: &Params<Rational>, order: usize) -> Result<Vec<Case>> {
    let ps = p.convert::<S>();
    let sol = assemble(n, &ps, order, Mode::Alg1, Execution::Sequential)?;
    let half = Rational::from_ratio(1, 2);
    let jac = jacobi_poly(n, &(p.g[0].clone() - half.clone()), &(p.g[1].clone() - half))?
        .map(S::from_rational);
    let scale = jac.coeffs().iter().map(|c| c.modulus()).fold(1.0, f64::max);
    let pd = if S::EXACT {
        if sol.poly[0] == jac {
            0.0
        } else {
            sol.poly[0].max_abs_diff(&jac).max(f64::MIN_POSITIVE)
        }
    } else {
        sol.poly[0].max_abs_diff(&jac) / scale
    };
    let tol = tol_for::<S>(1e-10);
    Ok(vec![
        Case::new(format!("{} n={n} P^(0) vs Jacobi", S::NAME), pd, tol),
        Case::new(
            format!("{} n={n} E^(0)", S::NAME),
            deviation(sol.eigen.constant(), &ps.e0(n)),
            tol,
        ),
    ])
}

/// Zeroth order of the assembled polynomial against the Jacobi polynomial,
/// `n = 0..=8`, in the configured scalar mode (both modes by default).
pub fn trig_limit(cfg: &VerifyConfig) -> Report {
    let order = cfg.order.unwrap_or(1);
    let mut s = Sampler::new(cfg.seed);
    let pts: Vec<Params<Rational>> = (0..cfg.points_or(20))
        .filter_map(|_| {
            s.params_where(None, 50, |p| (0..=8).all(|n| alg1(n, p, order).is_ok()))
        })
        .collect();
    let modes = match cfg.scalar {
        Some(m) => vec![m],
        None => vec![ScalarMode::Rational, ScalarMode::Complex],
    };
    let mut jobs: Vec<Job> = Vec::new();
    for p in pts {
        for n in 0..=8 {
            for &m in &modes {
                let p = p.clone();
                jobs.push(job(format!("n={n} {}", show(&p)), move || match m {
                    ScalarMode::Rational => trig_case::<Rational>(n, &p, order),
                    ScalarMode::Complex => trig_case::<C64>(n, &p, order),
                }));
            }
        }
    }
    run_jobs("jacobi-limit", cfg.exec, jobs)
}

fn point_set(cfg: &VerifyConfig, seed_shift: u64, count: usize, order: usize) -> Vec<(i64, Params<Rational>)> {
    let mut s = Sampler::new(cfg.seed.wrapping_add(seed_shift));
    (0..count)
        .filter_map(|_| {
            let n = s.int(0, 4);
            s.params_where(None, 50, |p| alg1(n, p, order).is_ok()).map(|p| (n, p))
        })
        .collect()
}

/// First- and second-order eigenvalues against both closed forms.
pub fn closed_eigen(cfg: &VerifyConfig) -> Report {
    let jobs = point_set(cfg, 1, cfg.points_or(20), 2)
        .into_iter()
        .map(|(n, p)| {
            job(format!("n={n} {}", show(&p)), move || {
                let (_, e) = alg1(n, &p, 2)?;
                let o = LowOrder::new(n, &p);
                Ok(vec![
                    Case::new(format!("n={n} E1 P-form"), deviation(e.coeff(1), &o.e1()?), 0.0),
                    Case::new(format!("n={n} E2 P-form"), deviation(e.coeff(2), &o.e2()?), 0.0),
                    Case::new(format!("n={n} E1 b-form"), deviation(e.coeff(1), &o.e1_b()?), 0.0),
                    Case::new(format!("n={n} E2 b-form"), deviation(e.coeff(2), &o.e2_b()?), 0.0),
                ])
            })
        })
        .collect();
    run_jobs("closed-eigen", cfg.exec, jobs)
}

/// The tabulated low-order coefficients.
pub fn appc_table(cfg: &VerifyConfig) -> Report {
    let jobs = point_set(cfg, 2, cfg.points_or(10), 3)
        .into_iter()
        .map(|(n, p)| {
            job(format!("n={n} {}", show(&p)), move || {
                let (t, _) = alg1(n, &p, 3)?;
                let o = LowOrder::new(n, &p);
                Ok(o.table()?
                    .into_iter()
                    .map(|(l, k, v)| {
                        Case::new(format!("n={n} a^({l})({k})"), deviation(&t.value(l, n + k), &v), 0.0)
                    })
                    .collect())
            })
        })
        .collect();
    run_jobs("appc", cfg.exec, jobs)
}

/// Bridge of the fixed-eigenvalue table against the direct recursion, the
/// path sums against the fixed-eigenvalue recursion, and the stationary fixed
/// point against the direct recursion.
pub fn engines_xval(cfg: &VerifyConfig) -> Report {
    let count = cfg.points_or(10);
    let bridge_order = cfg.order.unwrap_or(6);
    let mut s = Sampler::new(cfg.seed.wrapping_add(3));
    let mut jobs: Vec<Job> = Vec::new();
    for _ in 0..count {
        let n = s.int(0, 3);
        let Some(p) = s.params_where(None, 50, |p| {
            !p.kappa.is_zero() && alg2(n, p, bridge_order).is_ok() && alg1(n, p, bridge_order).is_ok()
        }) else {
            continue;
        };
        jobs.push(job(format!("bridge n={n} {}", show(&p)), move || {
            let (tb, eb) = bridge(&alg2(n, &p, bridge_order)?)?;
            let (ta, ea) = alg1(n, &p, bridge_order)?;
            let ed = ea.series.max_abs_diff(&eb.series);
            let ed = if ea.series != eb.series { ed.max(f64::MIN_POSITIVE) } else { ed };
            Ok(vec![
                Case::new(format!("bridge n={n} table"), table_dev(&tb, &ta, bridge_order), 0.0),
                Case::new(format!("bridge n={n} eigenvalue"), ed, 0.0),
            ])
        }));
    }
    for _ in 0..count {
        let n = s.int(0, 3);
        let Some(p) = s.params_where(None, 50, |p| !p.kappa.is_zero() && alg2(n, p, 3).is_ok()) else {
            continue;
        };
        jobs.push(job(format!("paths n={n} {}", show(&p)), move || {
            let t = alg2(n, &p, 3)?;
            let mut worst = 0.0f64;
            for l in 0..=3 {
                let (lo, hi) = t.window(l);
                for m in lo..=hi {
                    worst = worst.max(deviation(&thm2_alpha(n, m, l, &p)?, &t.value(l, m)));
                }
            }
            Ok(vec![Case::new(format!("paths n={n} l<=3"), worst, 0.0)])
        }));
    }
    let fp_order = cfg.order.map_or(4, |o| o.min(4));
    for _ in 0..count {
        let n = s.int(0, 3);
        let Some(p) = s.params_where(Some(Rational::zero()), 50, |p| alg1(n, p, fp_order).is_ok()) else {
            continue;
        };
        jobs.push(job(format!("fixed point n={n} {}", show(&p)), move || {
            let (e1, t1) = thm1_eigen(n, &p, fp_order)?;
            let (ta, ea) = alg1(n, &p, fp_order)?;
            let ed = if e1.series == ea.series { 0.0 } else { e1.series.max_abs_diff(&ea.series).max(f64::MIN_POSITIVE) };
            Ok(vec![
                Case::new(format!("fixed point n={n} eigenvalue"), ed, 0.0),
                Case::new(format!("fixed point n={n} table"), table_dev(&t1, &ta, fp_order), 0.0),
            ])
        }));
    }
    run_jobs("engines-xval", cfg.exec, jobs)
}

/// Errors of the all-orders eigenvalue formula against the stationary series.
#[derive(Debug, Clone)]
pub struct KappaLimitSample {
    pub n: i64,
    pub l: usize,
    pub err_big: f64,
    pub err_small: f64,
}

impl KappaLimitSample {
    pub fn ratio(&self) -> f64 {
        self.err_big / self.err_small
    }
}

/// Coefficient errors `|E^{(l)}(kappa) - E^{(l)}(0)|` at `kappa = 1e-3, 1e-4`.
pub fn kappa_limit_samples(n: i64, g: &[Rational; 4], order: usize) -> Result<Vec<KappaLimitSample>> {
    let p0 = Params::new(g.clone(), Rational::zero());
    let (_, e0) = alg1(n, &p0, order)?;
    let at = |k: Rational| -> Result<Vec<Rational>> {
        let p = Params::new(g.clone(), k.clone());
        let diag = thm2_diagonal(n, &p, order)?;
        Ok(all_orders_eigen_series(&diag, &k, &p.e0(n))?.coeffs().to_vec())
    };
    let big = at(Rational::from_ratio(1, 1000))?;
    let small = at(Rational::from_ratio(1, 10_000))?;
    Ok((1..=order)
        .map(|l| KappaLimitSample {
            n,
            l,
            err_big: (big[l].clone() - e0.coeff(l).clone()).modulus(),
            err_small: (small[l].clone() - e0.coeff(l).clone()).modulus(),
        })
        .collect())
}

/// The all-orders formula approaches the stationary series linearly in `kappa`.
pub fn kappa_limit(cfg: &VerifyConfig) -> Report {
    let order = cfg.order.map_or(3, |o| o.min(3));
    let mut s = Sampler::new(cfg.seed.wrapping_add(4));
    let jobs = (0..cfg.points_or(4))
        .filter_map(|_| {
            let n = s.int(0, 3);
            s.params_where(Some(Rational::zero()), 50, |p| {
                kappa_limit_samples(n, &p.g, order).is_ok()
            })
            .map(|p| (n, p))
        })
        .map(|(n, p)| {
            job(format!("kappa limit n={n} {}", show(&p)), move || {
                Ok(kappa_limit_samples(n, &p.g, order)?
                    .into_iter()
                    .filter(|x| x.err_small > 0.0)
                    .map(|x| {
                        let r = x.ratio();
                        Case::new(
                            format!("kappa limit n={n} l={} ratio {r:.3}", x.l),
                            (r / 10.0).log10().abs(),
                            3f64.log10(),
                        )
                    })
                    .collect())
            })
        })
        .collect();
    run_jobs("kappa-limit", cfg.exec, jobs)
}

/// All permutations of four objects.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

/// Eigenvalue invariance under permutations of the c-parameters at `kappa = 0`,
/// with one `kappa = 1` control that must break it.
pub fn s4_symmetry(cfg: &VerifyConfig) -> Report {
    let order = cfg.order.unwrap_or(4);
    let mut s = Sampler::new(cfg.seed.wrapping_add(5));
    let perms = permutations4();
    let mut jobs: Vec<Job> = Vec::new();
    for _ in 0..cfg.points_or(2) {
        let n = s.int(0, 2);
        let Some(p) = s.params_where(Some(Rational::zero()), 50, |p| {
            perms.iter().all(|&sg| s4_check(n, p, order, sg).is_ok())
        }) else {
            continue;
        };
        for &sg in &perms {
            let p = p.clone();
            jobs.push(job(format!("s4 n={n} sigma={sg:?}"), move || {
                Ok(vec![Case::new(format!("s4 n={n} sigma={sg:?}"), s4_check(n, &p, order, sg)?, 0.0)])
            }));
        }
    }
    let control = Params::new(
        [
            Rational::from_ratio(1, 3),
            Rational::from_ratio(5, 7),
            Rational::from_ratio(-2, 5),
            Rational::from_ratio(3, 4),
        ],
        Rational::from_i64(1),
    );
    jobs.push(job("s4 control kappa=1", move || {
        Ok(vec![Case::control("s4 control kappa=1 (c0 c1)", s4_check(1, &control, order, [1, 0, 2, 3])?, 0.0)])
    }));
    run_jobs("s4", cfg.exec, jobs)
}

/// Dual exponents in {0, 1}: the coefficient table is a Kronecker delta and
/// the solution is `N_n f_n`.
pub fn corollary(cfg: &VerifyConfig) -> Report {
    let order = cfg.order.unwrap_or(6);
    let lam = Rational::from_ratio(13, 11);
    let mut jobs: Vec<Job> = Vec::new();
    for gt0 in 0..2 {
        for gt1 in 0..2 {
            for gt23 in 0..2 {
                for n in 0..=3 {
                    let p = Params::trivial_gamma(lam.clone(), [gt0, gt1, gt23, gt23]);
                    let label = format!("pattern ({gt0},{gt1},{gt23},{gt23}) n={n}");
                    jobs.push(job(label.clone(), move || {
                        let sol = assemble(n, &p, order, Mode::Alg1, Execution::Sequential)?;
                        let mut delta = 0.0f64;
                        for (l, m, v) in sol.table.entries() {
                            let want = if l == 0 && m == n { Rational::from_i64(1) } else { Rational::zero() };
                            delta = delta.max(deviation(v, &want));
                        }
                        let f = f_table(&p, order, n, n)?;
                        let mut pd = 0.0f64;
                        for l in 0..=order {
                            let want = Module::scale(f.coeff(n, l), &sol.norm);
                            if sol.poly[l] != want {
                                pd = pd.max(sol.poly[l].max_abs_diff(&want).max(f64::MIN_POSITIVE));
                            }
                        }
                        Ok(vec![
                            Case::new(format!("{label} delta table"), delta, 0.0),
                            Case::new(format!("{label} P = N f"), pd, 0.0),
                        ])
                    }));
                }
            }
        }
    }
    run_jobs("corollary", cfg.exec, jobs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyConfig {
        VerifyConfig {
            points: Some(2),
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn permutations_are_distinct() {
        let p = permutations4();
        assert_eq!(p.len(), 24);
        let mut q = p.clone();
        q.sort();
        q.dedup();
        assert_eq!(q.len(), 24);
    }

    #[test]
    fn small_runs_pass() {
        let cfg = quick();
        for r in [closed_eigen(&cfg), appc_table(&cfg)] {
            assert!(r.pass, "{r:?}");
            assert_eq!(r.max_deviation, 0.0);
        }
    }

    #[test]
    fn trig_limit_small() {
        let cfg = VerifyConfig { points: Some(1), ..VerifyConfig::default() };
        let r = trig_limit(&cfg);
        assert!(r.pass, "{r:?}");
        assert_eq!(r.cases, 9 * 2 * 2);
    }

    #[test]
    fn kappa_limit_is_linear() {
        let g = [
            Rational::from_ratio(1, 3),
            Rational::from_ratio(5, 7),
            Rational::from_ratio(-2, 5),
            Rational::from_ratio(3, 4),
        ];
        for x in kappa_limit_samples(1, &g, 2).unwrap() {
            let r = x.ratio();
            assert!(r > 10.0 / 3.0 && r < 30.0, "l={} ratio {r}", x.l);
        }
    }
}
