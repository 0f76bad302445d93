//! Numeric oracle for `f_m(z; q)`: trapezoid rule for the contour integral
//! of the generating function over `|xi| = R`.
//!
//! The integrand is a product of linear factors `(1 - a)^p`. Each is taken on
//! the principal branch, which agrees with the binomial series exactly when
//! `|a| < 1`. A factor with `|a| >= 1` and a non-polynomial exponent would put
//! the contour outside the annulus where the Laurent expansion lives, so it is
//! rejected, as is any factor that comes too close to zero.

use crate::error::{HeunError, Result};
use crate::params::Params;
use crate::seriescore::{Scalar, C64};
use crate::specfun::{Nome, SERIES_CUTOFF};
use std::f64::consts::PI;

/// Smallest admissible `|1 - a|` on the contour.
const NEAR_ZERO: f64 = 1e-6;

#[derive(Debug, Clone, Copy)]
pub struct ContourConfig {
    /// Number of quadrature nodes.
    pub points: usize,
    /// Contour radius; `None` picks `max(0.5, (1 + |q|) / 2)`.
    pub radius: Option<f64>,
}

impl Default for ContourConfig {
    fn default() -> Self {
        ContourConfig {
            points: 512,
            radius: None,
        }
    }
}

struct Factor {
    a: C64,
    p: C64,
    polynomial: bool,
}

fn factors(z: C64, xi: C64, q: C64, gt: &[C64; 4], gt_poly: &[bool; 4], lam: C64, lam_poly: bool) -> Vec<Factor> {
    let mut out = Vec::new();
    let inv = xi.inv();
    let disc = (z * z - 1.0).sqrt();
    let rho = [z + disc, z - disc];
    let mut push = |a: C64, nu: Option<usize>| {
        let (p, polynomial) = match nu {
            Some(nu) => (gt[nu], gt_poly[nu]),
            None => (-lam, lam_poly),
        };
        out.push(Factor { a, p, polynomial });
    };
    push(xi, Some(0));
    push(-xi, Some(1));
    for r in rho {
        push(r * xi, None);
    }
    let mut qk = q;
    let mut k = 1;
    while qk.norm() >= SERIES_CUTOFF {
        let (nus, signs) = if k % 2 == 0 { ([0, 1], [1.0, -1.0]) } else { ([3, 2], [1.0, -1.0]) };
        for (nu, s) in nus.into_iter().zip(signs) {
            push(qk * xi * s, Some(nu));
            push(qk * inv * s, Some(nu));
        }
        if k % 2 == 0 {
            for r in rho {
                push(r * qk * xi, None);
                push(r * qk * inv, None);
            }
        }
        qk *= q;
        k += 1;
    }
    out
}

/// `f_m(z0; q0)` by `K`-point trapezoid quadrature on `|xi| = R`.
pub fn f_contour<S: Scalar>(
    m: i64,
    z0: C64,
    nome: &Nome,
    params: &Params<S>,
    cfg: ContourConfig,
) -> Result<C64> {
    let q = nome.q();
    let radius = cfg.radius.unwrap_or_else(|| 0.5f64.max((1.0 + q.norm()) / 2.0));
    if !(q.norm() < radius && radius < 1.0) {
        return Err(HeunError::Domain(format!(
            "contour radius {radius} must lie between |q| = {} and 1",
            q.norm()
        )));
    }
    if cfg.points == 0 {
        return Err(HeunError::pre("quadrature needs at least one node"));
    }
    let gts = params.gt();
    let gt = gts.clone().map(|g| g.to_c64());
    let gt_poly = gts.map(|g| g.is_nonneg_integer());
    let lam_s = params.lambda();
    let lam = lam_s.to_c64();
    let lam_poly = (-lam_s).is_nonneg_integer();
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..cfg.points {
        let xi = C64::from_polar(radius, 2.0 * PI * j as f64 / cfg.points as f64);
        let mut log = C64::new(0.0, 0.0);
        for f in factors(z0, xi, q, &gt, &gt_poly, lam, lam_poly) {
            if f.p.norm() == 0.0 {
                continue;
            }
            let one_minus = 1.0 - f.a;
            if one_minus.norm() < NEAR_ZERO {
                return Err(HeunError::BranchHazard(format!(
                    "integrand factor vanishes near xi = {xi}"
                )));
            }
            if f.a.norm() >= 1.0 && !f.polynomial {
                return Err(HeunError::BranchHazard(format!(
                    "contour |xi| = {radius} leaves the expansion annulus at xi = {xi}"
                )));
            }
            log += f.p * one_minus.ln();
        }
        acc += (log - C64::new(m as f64, 0.0) * xi.ln()).exp();
    }
    Ok(acc / cfg.points as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::f_table;
    use crate::seriescore::Rational;
    use crate::specfun::{big_theta, big_theta_nu, gegenbauer_explicit};

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    #[test]
    fn negative_index_vanishes_at_zero_nome() {
        let p = Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(2, 9));
        let nome = Nome::real(0.0).unwrap();
        for m in [-1, -3] {
            let v = f_contour(m, C64::new(0.3, 0.0), &nome, &p, ContourConfig::default()).unwrap();
            assert!(v.norm() < 1e-12);
        }
    }

    #[test]
    fn gegenbauer_at_zero_nome() {
        let lam = r(5, 3);
        let p = Params::trivial_gamma(lam.clone(), [0, 0, 0, 0]);
        let nome = Nome::real(0.0).unwrap();
        let z = C64::new(0.4, 0.0);
        for n in 0..6 {
            let v = f_contour(n, z, &nome, &p, ContourConfig::default()).unwrap();
            let c = gegenbauer_explicit(n as usize, &lam).eval_c64(z);
            assert!((v - c).norm() < 1e-10, "n={n}: {v} vs {c}");
        }
    }

    #[test]
    fn matches_series_for_integer_duals() {
        let p = Params::trivial_gamma(r(2, 1), [2, 1, 3, 0]);
        let order = 24;
        let t = f_table(&p, order, -2, 6).unwrap();
        let nome = Nome::from_q(C64::new(0.12, 0.1)).unwrap();
        let z = C64::new(0.25, 0.0);
        for m in -2..=6 {
            let v = f_contour(m, z, &nome, &p, ContourConfig::default()).unwrap();
            let s = t.eval(m, z, nome.q()).unwrap();
            assert!((v - s).norm() < 1e-8, "m={m}: {v} vs {s}");
        }
    }

    #[test]
    fn factor_product_is_theta_ratio() {
        // integer exponents: the branch-free product must equal the theta ratio
        let p = Params::trivial_gamma(r(1, 1), [2, 1, 1, 3]);
        let nome = Nome::real(0.2).unwrap();
        let z = C64::new(0.1, 0.0);
        let xi = C64::from_polar(0.7, 0.4);
        let gt = p.gt().map(|g| g.to_c64());
        let prod: C64 = factors(z, xi, nome.q(), &gt, &[true; 4], C64::new(1.0, 0.0), false)
            .iter()
            .map(|f| (1.0 - f.a).powc(f.p))
            .product();
        let mut expect = big_theta(z, xi, &nome).inv();
        for nu in 0..4 {
            expect *= big_theta_nu(nu + 1, xi, &nome).unwrap().powc(gt[nu]);
        }
        assert!((prod - expect).norm() < 1e-12 * expect.norm());
    }

    #[test]
    fn rejects_bad_radius() {
        let p = Params::trivial_gamma(r(1, 2), [0, 0, 0, 0]);
        let nome = Nome::real(0.3).unwrap();
        let cfg = ContourConfig { points: 64, radius: Some(0.2) };
        assert!(f_contour(0, C64::new(0.0, 0.0), &nome, &p, cfg).is_err());
    }
}
