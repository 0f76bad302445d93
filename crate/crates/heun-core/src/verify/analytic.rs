//! Suites that evaluate functions numerically: special-function identities,
//! basis-function structure, quadrature, and finite-difference residuals.

use super::sample::Sampler;
use super::{job, run_jobs, Case, Job, Report, VerifyConfig};
use crate::basis::{f0_closed, f_contour, f_table, ContourConfig};
use crate::error::Result;
use crate::exec::Execution;
use crate::params::Params;
use crate::seriescore::{
    binomial, unit_pow, FromRational, QSeries, Rational, Scalar, ScalarMode, ZPoly, C64,
};
use crate::solution::{
    assemble, jacobi_integral_check, kernel_check, lemma42_check, residual, residual_scaled,
    JacobiVariant, Mode,
};
use crate::specfun::{
    big_theta, eta1_over_pi, eta1_over_pi_series, euler_g, gegenbauer, gegenbauer_explicit, log_euler_g,
    log_theta_half, theta, wp_fourier, wp_shifted, Nome,
};
use num_traits::Zero;
use std::f64::consts::PI;

/// `tau` on the imaginary axis with real nome `q`.
pub fn tau_for(q: f64) -> C64 {
    C64::new(0.0, -q.ln() / PI)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// A nome drawn with `|q|` in `[lo, hi]`, returned as `tau`.
fn random_tau(s: &mut Sampler, lo: f64, hi: f64) -> C64 {
    let r = lo + (hi - lo) * s.unit_f64();
    let phi = PI * (2.0 * s.unit_f64() - 1.0);
    C64::new(phi / PI, -r.ln() / PI)
}

/// Theta product forms, `eta1/pi` and the Fourier expansions of the four
/// shifted Weierstrass functions.
pub fn specfun(cfg: &VerifyConfig) -> Report {
    let mut s = Sampler::new(cfg.seed.wrapping_add(11));
    let mut jobs: Vec<Job> = Vec::new();
    // product representation of theta_nu(y/2), and the paired identity
    for i in 0..cfg.points_or(50) {
        let tau = random_tau(&mut s, 0.01, 0.5);
        let t = PI * tau.im;
        let y = C64::new(2.0 * PI * s.unit_f64(), 0.9 * t * s.unit_f64());
        let x = C64::new(2.0 * PI * s.unit_f64(), 0.9 * t * s.unit_f64());
        jobs.push(job(format!("theta products #{i}"), move || {
            let nome = Nome::from_tau(tau)?;
            let mut cases = Vec::new();
            for nu in 1..=4 {
                let a = theta(nu, y / 2.0, &nome)?;
                let b = log_theta_half(nu, y, &nome)?.exp();
                cases.push(Case::new(format!("theta_{nu} product #{i}"), rel(b, a), 1e-12));
            }
            let lhs = theta(1, (x + y) / 2.0, &nome)? * theta(1, (x - y) / 2.0, &nome)?;
            let q2 = nome.q_quarter() * nome.q_quarter();
            let g = euler_g(&nome);
            let rhs = q2 * g * g * (-C64::i() * y).exp() * big_theta(x.cos(), (C64::i() * y).exp(), &nome);
            cases.push(Case::new(format!("paired theta identity #{i}"), rel(rhs, lhs), 1e-12));
            Ok(cases)
        }));
    }
    // eta1/pi as a series against the divisor sums
    jobs.push(job("eta1 series", || {
        let order = 24;
        let ser = eta1_over_pi_series::<Rational>(order);
        let mut worst = 0.0f64;
        for k in 0..=order {
            let want = if k == 0 {
                Rational::from_ratio(1, 12)
            } else if k % 2 == 1 {
                Rational::from_i64(0)
            } else {
                let m = (k / 2) as i64;
                let sigma: i64 = (1..=m).filter(|d| m % d == 0).sum();
                Rational::from_i64(-2 * sigma)
            };
            worst = worst.max(super::deviation(ser.coeff(k), &want));
        }
        Ok(vec![Case::new("eta1/pi series vs divisor sums", worst, 0.0)])
    }));
    for i in 0..10 {
        let tau = random_tau(&mut s, 0.01, 0.5);
        jobs.push(job(format!("eta1 numeric #{i}"), move || {
            let nome = Nome::from_tau(tau)?;
            let eta = eta1_over_pi(&nome);
            let ser = eta1_over_pi_series::<C64>(160).eval(nome.q());
            // (i/pi) d/dtau log G = 1/12 - eta1/pi, by a fourth-order difference
            let h = 2e-4;
            let lg = |d: f64| -> Result<C64> { Ok(log_euler_g(&Nome::from_tau(tau + d)?)) };
            let dlg = (-lg(2.0 * h)? + 8.0 * lg(h)? - 8.0 * lg(-h)? + lg(-2.0 * h)?) / (12.0 * h);
            let lhs = C64::i() / PI * dlg;
            Ok(vec![
                Case::new(format!("eta1/pi numeric vs series #{i}"), rel(eta, ser), 1e-12),
                Case::new(format!("log G derivative #{i}"), rel(lhs, 1.0 / 12.0 - eta), 1e-10),
            ])
        }));
    }
    // Fourier expansions of wp(x + omega_nu) in 0 < Im x < pi Im tau
    for i in 0..10 {
        let tau = random_tau(&mut s, 0.02, 0.5);
        let t = PI * tau.im;
        let x = C64::new(2.0 * PI * s.unit_f64(), t * (0.2 + 0.6 * s.unit_f64()));
        jobs.push(job(format!("wp Fourier #{i}"), move || {
            let nome = Nome::from_tau(tau)?;
            let eta = eta1_over_pi(&nome);
            let mut cases = Vec::new();
            for nu in 0..4 {
                let direct = wp_shifted(nu, x, tau)?;
                let mut sum = -eta;
                for mu in 1..=20_000i64 {
                    let e = (C64::i() * mu as f64 * x).exp();
                    let t = wp_fourier(nu, mu, &nome)? * e + wp_fourier(nu, -mu, &nome)? / e;
                    sum -= t;
                    if t.norm() < 1e-18 * sum.norm().max(1.0) && mu > 8 {
                        break;
                    }
                }
                cases.push(Case::new(format!("wp Fourier nu={nu} #{i}"), rel(sum, direct), 1e-10));
            }
            Ok(cases)
        }));
    }
    run_jobs("eta1", cfg.exec, jobs)
}

/// Coefficients of `(1 - 2 z xi + xi^2)^{-lambda}` by series arithmetic
/// against the Gegenbauer polynomials.
pub fn gegenbauer_generating(cfg: &VerifyConfig) -> Report {
    let lambdas = [(5, 3), (-1, 2), (7, 4), (1, 1), (-5, 2)];
    let jobs = lambdas
        .into_iter()
        .map(|(p, q)| {
            job(format!("gegenbauer lambda={p}/{q}"), move || {
                let lam = Rational::from_ratio(p, q);
                let one = Rational::from_i64(1);
                let base = QSeries::from_coeffs(
                    vec![
                        ZPoly::constant(one.clone()),
                        ZPoly::monomial(Rational::from_i64(-2), 1),
                        ZPoly::constant(one),
                    ],
                    8,
                );
                let gen = unit_pow(&base, &(-lam.clone()))?;
                let mut worst = 0.0f64;
                for n in 0..=8usize {
                    // the Jacobi route is undefined when (lambda + 1/2)_n vanishes
                    let mut refs = vec![gegenbauer_explicit(n, &lam)];
                    refs.extend(gegenbauer(n as i64, &lam).ok());
                    for c in refs {
                        if gen.coeff(n) != &c {
                            worst = worst.max(gen.coeff(n).max_abs_diff(&c).max(f64::MIN_POSITIVE));
                        }
                    }
                }
                Ok(vec![Case::new(format!("generating function lambda={p}/{q}, n<=8"), worst, 0.0)])
            })
        })
        .collect();
    run_jobs("gegenbauer", cfg.exec, jobs)
}

/// Vanishing, degree and leading coefficient of the basis functions, the
/// closed zeroth order, and contour quadrature against the series.
pub fn basis_structure(cfg: &VerifyConfig) -> Report {
    let order = cfg.order.unwrap_or(5);
    let mut s = Sampler::new(cfg.seed.wrapping_add(12));
    let mut jobs: Vec<Job> = Vec::new();
    for i in 0..cfg.points_or(3) {
        let p = s.params(None);
        jobs.push(job(format!("structure #{i}"), move || {
            let t = f_table(&p, order, -(order as i64) - 1, 8)?;
            let (lo, hi) = t.window();
            let (mut vanish, mut degree, mut lead, mut closed) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
            let lam = p.lambda();
            for m in lo..=hi {
                for l in 0..=order {
                    let f = t.coeff(m, l);
                    let top = m + l as i64;
                    if top < 0 {
                        if !f.is_zero() {
                            vanish = 1.0;
                        }
                    } else if f.degree().is_none_or(|d| d as i64 != top) {
                        degree = 1.0;
                    }
                }
                if m >= 0 {
                    let f = t.coeff(m, 0);
                    let want = binomial(&(-lam.clone()), m as usize) * Rational::from_i64(-2).pow_u(m as u32);
                    lead = lead.max(super::deviation(&f.coeff(m as usize), &want));
                    let c = f0_closed(m, &p);
                    if *f != c {
                        closed = closed.max(f.max_abs_diff(&c).max(f64::MIN_POSITIVE));
                    }
                }
            }
            Ok(vec![
                Case::new(format!("vanishing below m + l = 0 #{i}"), vanish, 0.0),
                Case::new(format!("degree m + l #{i}"), degree, 0.0),
                Case::new(format!("leading coefficient #{i}"), lead, 0.0),
                Case::new(format!("closed zeroth order #{i}"), closed, 0.0),
            ])
        }));
    }
    let sets: [((i64, i64), [i64; 4]); 3] = [((2, 1), [2, 1, 3, 0]), ((1, 1), [2, 1, 1, 3]), ((7, 3), [1, 2, 0, 1])];
    let nomes = [C64::new(0.12, 0.1), C64::new(-0.2, 0.0), C64::new(0.0, 0.15)];
    for ((a, b), gt) in sets {
        for q in nomes {
            jobs.push(job(format!("contour lambda={a}/{b} gt={gt:?} q={q}"), move || {
                let p = Params::trivial_gamma(Rational::from_ratio(a, b), gt);
                // floats suffice here: the comparison is against quadrature
                let t = f_table(&p.convert::<C64>(), 28, -2, 6)?;
                let nome = Nome::from_q(q)?;
                let z = C64::new(0.25, 0.0);
                let mut worst = 0.0f64;
                for m in -2..=6 {
                    let v = f_contour(m, z, &nome, &p, ContourConfig::default())?;
                    let w = t.eval(m, z, q).expect("inside the window");
                    worst = worst.max((v - w).norm());
                }
                Ok(vec![Case::new(format!("contour vs series lambda={a}/{b} gt={gt:?} q={q}"), worst, 1e-8)])
            }));
        }
    }
    run_jobs("basis", cfg.exec, jobs)
}

/// The four zero-nome integral identities for Jacobi polynomials.
pub fn integrals(cfg: &VerifyConfig) -> Report {
    let g = Rational::from_ratio(3, 4);
    let z0 = C64::new(0.3, 0.0);
    let jobs = JacobiVariant::ALL
        .into_iter()
        .flat_map(|v| (0..=6).map(move |n| (v, n)))
        .map(|(v, n)| {
            let g = g.clone();
            job(format!("integral variant {} n={n}", v.index()), move || {
                let c = jacobi_integral_check(v, n, &g, z0)?;
                Ok(vec![Case::new(
                    format!("integral variant {} n={n}", v.index()),
                    c.deviation / c.jacobi.norm().max(1.0),
                    1e-8,
                )])
            })
        })
        .collect();
    run_jobs("integrals", cfg.exec, jobs)
}

fn generic() -> Params<Rational> {
    Params::new(
        [
            Rational::from_ratio(1, 3),
            Rational::from_ratio(5, 7),
            Rational::from_ratio(-2, 5),
            Rational::from_ratio(3, 4),
        ],
        Rational::from_ratio(2, 9),
    )
}

fn residual_case<S: FromRational>(
    label: String,
    n: i64,
    p: &Params<Rational>,
    order: usize,
    x: C64,
    tau: C64,
    h: f64,
    tol: f64,
) -> Result<Vec<Case>> {
    let sol = assemble(n, &p.convert::<S>(), order, Mode::Alg1, Execution::Sequential)?;
    let r = residual(&sol, x, tau, h)?;
    Ok(vec![Case::new(label, r.relative, tol)])
}

/// Finite-difference residuals of the differential equation at fixed sample
/// points with `Im x = 0.3 pi Im tau`.
pub fn residual_points(cfg: &VerifyConfig) -> Report {
    let q = cfg.q.unwrap_or(0.05);
    let order = cfg.order.unwrap_or(8);
    let h = cfg.h;
    let tol = cfg.residual_tol;
    let scalar = cfg.scalar.unwrap_or(ScalarMode::Complex);
    let corollary = Params::trivial_gamma(Rational::from_ratio(13, 11), [1, 0, 1, 1]);
    let mut stationary = generic();
    stationary.kappa = Rational::from_i64(0);
    let half = Rational::from_ratio(1, 2);
    let lame = Params::new([half.clone(), half.clone(), half.clone(), half], Rational::from_i64(0));
    let tau_c = C64::new(0.0, -q.ln() / PI) + C64::new(0.7 / PI, 0.0);
    let on_line = |re: f64, tau: C64| C64::new(re, 0.3 * PI * tau.im);
    let points: Vec<(String, i64, Params<Rational>, C64, C64, f64)> = vec![
        ("generic n=1".into(), 1, generic(), on_line(0.4, tau_for(q)), tau_for(q), tol),
        ("generic n=2".into(), 2, generic(), on_line(1.3, tau_for(q)), tau_for(q), tol),
        ("generic n=0 complex nome".into(), 0, generic(), on_line(0.9, tau_c), tau_c, tol),
        ("stationary n=1".into(), 1, stationary.clone(), on_line(0.7, tau_for(q)), tau_for(q), tol),
        // a vanishing denominator with vanishing right-hand side at (l, m) = (l, -2)
        ("equal couplings n=1".into(), 1, lame, on_line(0.5, tau_for(q)), tau_for(q), tol),
        ("special couplings n=2".into(), 2, corollary, on_line(0.4, tau_for(q)), tau_for(q), tol),
        (
            "trigonometric limit n=3".into(),
            3,
            stationary,
            C64::new(0.8, 0.3),
            C64::new(0.0, 12.0),
            1e-8,
        ),
    ];
    let mut jobs: Vec<Job> = points
        .into_iter()
        .map(|(label, n, p, x, tau, tol)| {
            job(label.clone(), move || {
                let label = format!("residual {label}");
                match scalar {
                    ScalarMode::Rational => residual_case::<Rational>(label, n, &p, order, x, tau, h, tol),
                    ScalarMode::Complex => residual_case::<C64>(label, n, &p, order, x, tau, h, tol),
                }
            })
        })
        .collect();
    jobs.push(job("rescaled half-period", move || {
        let sol = assemble(1, &generic().convert::<C64>(), order, Mode::Alg1, Execution::Sequential)?;
        let omega1 = C64::new(2.0, 0.5);
        let tau = tau_for(q);
        let x = C64::new(0.5, 0.1);
        let r = residual_scaled(&sol, omega1, x, tau, h)?;
        Ok(vec![Case::new("residual with half-period 2+0.5i", r.relative, tol)])
    }));
    jobs.push(job("single basis function", move || {
        let tau = tau_for(q);
        let r = lemma42_check(&generic().convert::<C64>(), 1, order, order as i64, on_line(0.6, tau), tau, h)?;
        Ok(vec![Case::new("basis-function identity", r.relative, tol)])
    }));
    run_jobs("residual", cfg.exec, jobs)
}

/// Residuals at truncation orders `lo` and `hi` and their ratio normalized by `|q|^{hi-lo}`.
#[derive(Debug, Clone, Copy)]
pub struct RatioSample {
    pub low: f64,
    pub high: f64,
    pub normalized: f64,
}

/// Compare residuals of the same solution truncated at two orders.
pub fn truncation_ratio(
    n: i64,
    params: &Params<Rational>,
    q: f64,
    x: C64,
    lo: usize,
    hi: usize,
    h: f64,
) -> Result<RatioSample> {
    let p = params.convert::<C64>();
    let tau = tau_for(q);
    let r = |order: usize| -> Result<f64> {
        let sol = assemble(n, &p, order, Mode::Alg1, Execution::Sequential)?;
        Ok(residual(&sol, x, tau, h)?.relative)
    };
    let (low, high) = (r(lo)?, r(hi)?);
    Ok(RatioSample {
        low,
        high,
        normalized: high / low / q.powi((hi - lo) as i32),
    })
}

/// Kernel identity at random complex configurations with `|q| <= 0.3`, at a
/// self-dual point, and a control with the constant shifted by one.
pub fn kernel(cfg: &VerifyConfig) -> Report {
    let h = cfg.h;
    let tol = cfg.residual_tol;
    let mut s = Sampler::new(cfg.seed.wrapping_add(13));
    let draw = |s: &mut Sampler| {
        let tau = random_tau(s, 0.05, 0.3);
        let t = PI * tau.im;
        let yi = t * (0.1 + 0.2 * s.unit_f64());
        let xi = yi + t * (0.1 + 0.2 * s.unit_f64());
        let x = C64::new(2.0 * PI * s.unit_f64(), xi);
        let y = C64::new(2.0 * PI * s.unit_f64(), yi);
        (x, y, tau)
    };
    let mut jobs: Vec<Job> = Vec::new();
    for i in 0..cfg.points_or(10) {
        let g: [C64; 4] = std::array::from_fn(|_| C64::new(2.0 * s.unit_f64() - 0.5, s.unit_f64() - 0.5));
        let kappa = C64::new(2.0 * s.unit_f64() - 1.0, s.unit_f64() - 0.5);
        let (x, y, tau) = draw(&mut s);
        jobs.push(job(format!("kernel #{i}"), move || {
            let p = Params::new(g, kappa);
            let r = kernel_check(&p, x, y, tau, h, C64::new(0.0, 0.0))?;
            Ok(vec![Case::new(format!("kernel identity #{i}"), r.relative, tol)])
        }));
    }
    let (x, y, tau) = draw(&mut s);
    jobs.push(job("kernel self-dual", move || {
        let g = Rational::from_ratio(3, 5);
        let p = Params::new([g.clone(), g.clone(), g.clone(), g], Rational::from_i64(0));
        let r = kernel_check(&p, x, y, tau, h, C64::new(0.0, 0.0))?;
        Ok(vec![Case::new("kernel identity self-dual point", r.relative, tol)])
    }));
    let (x, y, tau) = draw(&mut s);
    jobs.push(job("kernel control", move || {
        let p = generic().convert::<C64>();
        let r = kernel_check(&p, x, y, tau, h, C64::new(1.0, 0.0))?;
        Ok(vec![Case::control("kernel with shifted constant", r.relative, tol)])
    }));
    run_jobs("kernel", cfg.exec, jobs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_for_gives_real_nome() {
        let n = Nome::from_tau(tau_for(0.1)).unwrap();
        assert!((n.q() - C64::new(0.1, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn special_functions_pass() {
        let cfg = VerifyConfig { points: Some(5), ..VerifyConfig::default() };
        let r = specfun(&cfg);
        assert!(r.pass, "{r:?}");
        let r = gegenbauer_generating(&cfg);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn integrals_pass() {
        let r = integrals(&VerifyConfig::default());
        assert!(r.pass, "{r:?}");
        assert_eq!(r.cases, 28);
    }
}
