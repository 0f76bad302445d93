//! Finite-difference checks of the non-stationary Heun equation, the kernel
//! identity and the action of the operator on single basis functions.
//!
//! All derivatives use fourth-order central stencils; `tau` is shifted along
//! the real axis, which is harmless since every function involved is analytic
//! in `tau`. Halving the step gives a Richardson-style estimate of the
//! finite-difference part of a residual.

use super::{prefactor, total_e_with, SeriesSolution};
use crate::basis::f_table;
use crate::error::{HeunError, Result};
use crate::params::Params;
use crate::seriescore::{Scalar, C64};
use crate::specfun::{eta1_over_pi, log_theta_half, wp_fourier, wp_shifted, Nome, OmegaScale};
use std::f64::consts::PI;

/// Outcome of a residual evaluation.
#[derive(Debug, Clone, Copy)]
pub struct Residual {
    /// Operator applied to the function, minus the eigenvalue term.
    pub value: C64,
    /// Magnitude the residual is measured against.
    pub scale: f64,
    /// `|value| / scale`.
    pub relative: f64,
    /// `|value(h) - value(h/2)|`, an estimate of the finite-difference error.
    pub fd_estimate: f64,
}

impl Residual {
    fn new(value: C64, scale: f64, half: C64) -> Self {
        Residual {
            value,
            scale,
            relative: value.norm() / scale.max(f64::MIN_POSITIVE),
            fd_estimate: (value - half).norm(),
        }
    }
}

fn d_first(f: &impl Fn(f64) -> Result<C64>, h: f64) -> Result<C64> {
    Ok((-f(2.0 * h)? + 8.0 * f(h)? - 8.0 * f(-h)? + f(-2.0 * h)?) / (12.0 * h))
}

fn d_second(f: &impl Fn(f64) -> Result<C64>, f0: C64, h: f64) -> Result<C64> {
    Ok((-f(2.0 * h)? + 16.0 * f(h)? - 30.0 * f0 + 16.0 * f(-h)? - f(-2.0 * h)?) / (12.0 * h * h))
}

fn check_step(h: f64) -> Result<()> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(HeunError::pre(format!("finite-difference step {h} must be positive")));
    }
    Ok(())
}

/// `sum_nu c_nu wp(x + omega_nu)`.
fn potential(c: &[C64; 4], x: C64, tau: C64) -> Result<C64> {
    let mut v = C64::new(0.0, 0.0);
    for nu in 0..4 {
        if c[nu].norm() != 0.0 {
            v += c[nu] * wp_shifted(nu, x, tau)?;
        }
    }
    Ok(v)
}

fn couplings(g: &[C64; 4]) -> [C64; 4] {
    g.map(|g| g * (g - 1.0))
}

/// Pieces of `(i/pi) kappa d_tau - d_x^2 + V(x)` applied to `f` at one step size.
struct Applied {
    total: C64,
    scale: f64,
}

fn apply_heun(
    f: &impl Fn(C64, C64) -> Result<C64>,
    c: &[C64; 4],
    kappa: C64,
    x: C64,
    tau: C64,
    h: f64,
) -> Result<(Applied, C64)> {
    let f0 = f(x, tau)?;
    let dt = d_first(&|s| f(x, tau + s), h)?;
    let dxx = d_second(&|s| f(x + s, tau), f0, h)?;
    let v = potential(c, x, tau)? * f0;
    let t = C64::i() / PI * kappa * dt;
    Ok((
        Applied {
            total: t - dxx + v,
            scale: t.norm() + dxx.norm() + v.norm(),
        },
        f0,
    ))
}

/// `((i/pi) kappa d_tau - d_x^2 + sum g(g-1) wp(x + omega) - E_n) psi_n` at `(x, tau)`.
///
/// The scale is `|E_n psi_n|`, falling back to the size of the individual terms
/// when that is tiny.
pub fn residual<S: Scalar>(sol: &SeriesSolution<S>, x: C64, tau: C64, h: f64) -> Result<Residual> {
    check_step(h)?;
    let g = sol.g_c64();
    let c = couplings(&g);
    let kappa = sol.params.kappa.to_c64();
    let psi = |x: C64, t: C64| sol.eval_psi(x, t);
    let energy = |t: C64| -> Result<C64> { Ok(sol.total_e(&Nome::from_tau(t)?)) };
    let run = |h: f64| -> Result<(C64, f64)> {
        let (a, f0) = apply_heun(&psi, &c, kappa, x, tau, h)?;
        let e = energy(tau)? * f0;
        Ok((a.total - e, (e.norm()).max(1e-3 * a.scale)))
    };
    let (v, scale) = run(h)?;
    let (v2, _) = run(h / 2.0)?;
    Ok(Residual::new(v, scale, v2))
}

/// The same check for half-period `omega1`: the rescaled solution
/// `(pi/omega1)^{1/2} psi(pi x / omega1)` against
/// `(i pi / omega1^2) kappa d_tau - d_x^2 + sum g(g-1) wp(x + omega_nu | omega1) - (pi/omega1)^2 E`.
pub fn residual_scaled<S: Scalar>(
    sol: &SeriesSolution<S>,
    omega1: C64,
    x: C64,
    tau: C64,
    h: f64,
) -> Result<Residual> {
    check_step(h)?;
    let sc = OmegaScale::new(omega1)?;
    let g = sol.g_c64();
    let c = couplings(&g);
    let kappa = sol.params.kappa.to_c64();
    let psi = |x: C64, t: C64| -> Result<C64> {
        let y = sc.map_x(x);
        Ok(sc.factor().sqrt() * sol.eval_psi(y, t)?)
    };
    let run = |h: f64| -> Result<(C64, f64)> {
        let f0 = psi(x, tau)?;
        let dt = d_first(&|s| psi(x, tau + s), h)?;
        let dxx = d_second(&|s| psi(x + s, tau), f0, h)?;
        let om = sc.omegas(tau);
        let mut v = C64::new(0.0, 0.0);
        for nu in 0..4 {
            if c[nu].norm() != 0.0 {
                v += c[nu] * sc.wp(x + om[nu], tau)?;
            }
        }
        let v = v * f0;
        let t = C64::i() * PI / (omega1 * omega1) * kappa * dt;
        let e = sc.map_energy(sol.total_e(&Nome::from_tau(tau)?)) * f0;
        let scale = e.norm().max(1e-3 * (t.norm() + dxx.norm() + v.norm()));
        Ok((t - dxx + v - e, scale))
    };
    let (v, scale) = run(h)?;
    let (v2, _) = run(h / 2.0)?;
    Ok(Residual::new(v, scale, v2))
}

/// The kernel function
/// `prod theta_{nu+1}(x/2)^{g_nu} theta_{nu+1}(y/2)^{g~_nu} / (theta_1((x+y)/2) theta_1((x-y)/2))^lambda`,
/// on the branch of the product representation.
pub fn kernel_value<S: Scalar>(params: &Params<S>, x: C64, y: C64, tau: C64) -> Result<C64> {
    let nome = Nome::from_tau(tau)?;
    let g = params.g.clone().map(|v| v.to_c64());
    let gt = params.gt().map(|v| v.to_c64());
    let lam = params.lambda().to_c64();
    let mut log = -lam * (log_theta_half(1, x + y, &nome)? + log_theta_half(1, x - y, &nome)?);
    for nu in 0..4 {
        if g[nu].norm() != 0.0 {
            log += g[nu] * log_theta_half(nu + 1, x, &nome)?;
        }
        if gt[nu].norm() != 0.0 {
            log += gt[nu] * log_theta_half(nu + 1, y, &nome)?;
        }
    }
    Ok(log.exp())
}

/// `((i/pi) kappa d_tau + H(x; g) - H(y; g~) - C_{1,1}) K(x, y)` with
/// `C_{1,1} = 2 kappa (1 - lambda) eta1/pi + c11_shift`.
///
/// Requires `Im x > Im y > 0` and `Im(x + y) < 2 pi Im tau`, where the
/// product branch is continuous.
pub fn kernel_check<S: Scalar>(
    params: &Params<S>,
    x: C64,
    y: C64,
    tau: C64,
    h: f64,
    c11_shift: C64,
) -> Result<Residual> {
    check_step(h)?;
    if !(x.im > y.im && y.im > 0.0 && (x + y).im < 2.0 * PI * tau.im) {
        return Err(HeunError::Domain(format!(
            "kernel check needs Im x > Im y > 0 and Im(x+y) < 2 pi Im tau (x = {x}, y = {y})"
        )));
    }
    let g = params.g.clone().map(|v| v.to_c64());
    let gt = params.gt().map(|v| v.to_c64());
    let kappa = params.kappa.to_c64();
    let lam = params.lambda().to_c64();
    let cx = couplings(&g);
    let cy = couplings(&gt);
    let run = |h: f64| -> Result<(C64, f64)> {
        let k0 = kernel_value(params, x, y, tau)?;
        let dt = d_first(&|s| kernel_value(params, x, y, tau + s), h)?;
        let dxx = d_second(&|s| kernel_value(params, x + s, y, tau), k0, h)?;
        let dyy = d_second(&|s| kernel_value(params, x, y + s, tau), k0, h)?;
        let vx = potential(&cx, x, tau)? * k0;
        let vy = potential(&cy, y, tau)? * k0;
        let eta = eta1_over_pi(&Nome::from_tau(tau)?);
        let c11 = (2.0 * kappa * (1.0 - lam) * eta + c11_shift) * k0;
        let t = C64::i() / PI * kappa * dt;
        let total = t - dxx + vx + dyy - vy - c11;
        let scale = t.norm() + dxx.norm() + vx.norm() + dyy.norm() + vy.norm() + c11.norm();
        Ok((total, scale))
    };
    let (v, scale) = run(h)?;
    let (v2, _) = run(h / 2.0)?;
    Ok(Residual::new(v, scale, v2))
}

/// Residual of the single-basis-function identity
/// `((i/pi) kappa d_tau + H(x)) F_n = (C_0 + E^{(0)}_n) F_n - sum_{0 < |mu| <= mmax} S_mu F_{n - mu}`
/// with `F_m = (2 q^{1/4})^{-(g0+g1)} prod theta_{nu+1}(x/2)^{g_nu} f_m(cos x)` truncated at `q^order`.
pub fn lemma42_check<S: Scalar>(
    params: &Params<S>,
    n: i64,
    order: usize,
    mmax: i64,
    x: C64,
    tau: C64,
    h: f64,
) -> Result<Residual> {
    check_step(h)?;
    let basis = f_table(params, order, n - mmax, n + mmax)?;
    let g = params.g.clone().map(|v| v.to_c64());
    let c = couplings(&g);
    let gammas = params.gammas().map(|v| v.to_c64());
    let kappa = params.kappa.to_c64();
    let f = |m: i64, x: C64, t: C64| -> Result<C64> {
        let nome = Nome::from_tau(t)?;
        let pre = prefactor(&g, x, &nome)?.unwrap_or_default();
        Ok(pre * basis.eval(m, x.cos(), nome.q()).expect("inside the basis window"))
    };
    let run = |h: f64| -> Result<(C64, f64)> {
        let (a, f0) = apply_heun(&|x, t| f(n, x, t), &c, kappa, x, tau, h)?;
        let nome = Nome::from_tau(tau)?;
        let c0e = total_e_with(params, &nome, params.e0(n).to_c64());
        let mut rhs = c0e * f0;
        for mu in (-mmax..=mmax).filter(|&m| m != 0) {
            let mut s = C64::new(0.0, 0.0);
            for nu in 0..4 {
                s += gammas[nu] * wp_fourier(nu, mu, &nome)?;
            }
            rhs -= s * f(n - mu, x, tau)?;
        }
        Ok((a.total - rhs, a.scale.max(rhs.norm())))
    };
    let (v, scale) = run(h)?;
    let (v2, _) = run(h / 2.0)?;
    Ok(Residual::new(v, scale, v2))
}
