//! Jacobi theta functions by their Fourier series and by product forms.

use super::{Nome, SERIES_CUTOFF};
use crate::error::{HeunError, Result};
use crate::seriescore::C64;
use std::f64::consts::PI;

fn check_index(nu: usize) -> Result<()> {
    if (1..=4).contains(&nu) {
        Ok(())
    } else {
        Err(HeunError::pre(format!("theta index {nu} not in 1..=4")))
    }
}

/// `θ_ν(x)` from the defining Fourier series.
pub fn theta(nu: usize, x: C64, nome: &Nome) -> Result<C64> {
    check_index(nu)?;
    let q = nome.q();
    let zero = C64::new(0.0, 0.0);
    if q.norm() == 0.0 {
        return Ok(if nu >= 3 { C64::new(1.0, 0.0) } else { zero });
    }
    let mut sum = if nu >= 3 { C64::new(1.0, 0.0) } else { zero };
    let quarter = nome.q_quarter();
    for n in 0u32..10_000 {
        let term = match nu {
            1 | 2 => {
                // q^{(n+1/2)^2} = q^{1/4} q^{n(n+1)}
                let w = quarter * q.powu(n * (n + 1));
                let k = C64::new(2.0 * n as f64 + 1.0, 0.0) * x;
                if nu == 1 {
                    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                    w * k.sin() * (2.0 * sign)
                } else {
                    w * k.cos() * 2.0
                }
            }
            _ => {
                if n == 0 {
                    continue;
                }
                let w = q.powu(n * n);
                let c = (C64::new(2.0 * n as f64, 0.0) * x).cos() * 2.0;
                let sign = if nu == 4 && n % 2 == 1 { -1.0 } else { 1.0 };
                w * c * sign
            }
        };
        sum += term;
        if term.norm() <= SERIES_CUTOFF * sum.norm().max(f64::MIN_POSITIVE) && n > 0 {
            break;
        }
        if term.norm() == 0.0 && n > 2 {
            break;
        }
    }
    Ok(sum)
}

/// Iterate over `q^{2n}` (or `q^{2n-1}` when `odd`) for n = 1, 2, ... until negligible.
fn powers(q: C64, odd: bool) -> impl Iterator<Item = C64> {
    let q2 = q * q;
    let mut cur = if odd { q } else { q2 };
    std::iter::from_fn(move || {
        if cur.norm() < SERIES_CUTOFF {
            None
        } else {
            let v = cur;
            cur *= q2;
            Some(v)
        }
    })
}

/// `G = ∏ (1 - q^{2n})`.
pub fn euler_g(nome: &Nome) -> C64 {
    powers(nome.q(), false).fold(C64::new(1.0, 0.0), |acc, p| acc * (1.0 - p))
}

pub fn log_euler_g(nome: &Nome) -> C64 {
    powers(nome.q(), false).map(|p| (1.0 - p).ln()).sum()
}

/// Sum of principal logarithms of the factors of `Θ_ν(ξ)`.
///
/// Each factor is `1 - a` with `|a| < 1` away from the leading `(1 ∓ ξ)`, so
/// the result varies continuously with `ξ` as long as `|q| < |ξ| ≤ 1`.
pub fn log_big_theta_nu(nu: usize, xi: C64, nome: &Nome) -> Result<C64> {
    check_index(nu)?;
    if xi.norm() == 0.0 {
        return Err(HeunError::Domain("xi = 0".into()));
    }
    let q = nome.q();
    let sign = if nu == 1 || nu == 4 { -1.0 } else { 1.0 };
    let mut acc = C64::new(0.0, 0.0);
    if nu <= 2 {
        acc += (1.0 + sign * xi).ln();
    }
    let inv = xi.inv();
    for p in powers(q, nu >= 3) {
        acc += (1.0 + sign * p * xi).ln() + (1.0 + sign * p * inv).ln();
    }
    Ok(acc)
}

/// `Θ_ν(ξ)` as a product.
pub fn big_theta_nu(nu: usize, xi: C64, nome: &Nome) -> Result<C64> {
    check_index(nu)?;
    let q = nome.q();
    let sign = if nu == 1 || nu == 4 { -1.0 } else { 1.0 };
    let mut acc = if nu <= 2 {
        1.0 + sign * xi
    } else {
        C64::new(1.0, 0.0)
    };
    let inv = if xi.norm() == 0.0 { C64::new(0.0, 0.0) } else { xi.inv() };
    for p in powers(q, nu >= 3) {
        acc *= (1.0 + sign * p * xi) * (1.0 + sign * p * inv);
    }
    Ok(acc)
}

/// `Θ(z, ξ) = (1 - 2zξ + ξ²) ∏ (1 - 2q^{2n}ξz + q^{4n}ξ²)(1 - 2q^{2n}ξ^{-1}z + q^{4n}ξ^{-2})`.
pub fn big_theta(z: C64, xi: C64, nome: &Nome) -> C64 {
    let mut acc = 1.0 - 2.0 * z * xi + xi * xi;
    let inv = if xi.norm() == 0.0 { C64::new(0.0, 0.0) } else { xi.inv() };
    for p in powers(nome.q(), false) {
        let a = p * xi;
        let b = p * inv;
        acc *= (1.0 - 2.0 * z * a + a * a) * (1.0 - 2.0 * z * b + b * b);
    }
    acc
}

/// Principal-log sum for `Θ(z, ξ)`, splitting each quadratic factor into
/// linear ones `(1 - ρ₁ a)(1 - ρ₂ a)` with `ρ₁ρ₂ = 1`, `ρ₁ + ρ₂ = 2z`.
pub fn log_big_theta(z: C64, xi: C64, nome: &Nome) -> C64 {
    let disc = (z * z - 1.0).sqrt();
    let (r1, r2) = (z + disc, z - disc);
    let lin = |a: C64| (1.0 - r1 * a).ln() + (1.0 - r2 * a).ln();
    let mut acc = lin(xi);
    let inv = xi.inv();
    for p in powers(nome.q(), false) {
        acc += lin(p * xi) + lin(p * inv);
    }
    acc
}

/// `log θ_ν(y/2)` through the product representation, on the branch that
/// is continuous in `y` for `0 ≤ Im y < π Im τ` and in `τ` on the upper half-plane.
pub fn log_theta_half(nu: usize, y: C64, nome: &Nome) -> Result<C64> {
    check_index(nu)?;
    let i = C64::i();
    let xi = (i * y).exp();
    let base = log_euler_g(nome) + log_big_theta_nu(nu, xi, nome)?;
    let quarter = || -> Result<C64> { Ok(i * PI * nome.tau()? / 4.0) };
    Ok(match nu {
        1 => quarter()? + i * PI / 2.0 - i * y / 2.0 + base,
        2 => quarter()? - i * y / 2.0 + base,
        _ => base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nome(re: f64, im: f64) -> Nome {
        Nome::from_tau(C64::new(re, im)).unwrap()
    }

    #[test]
    fn theta_examples() {
        let n = nome(0.2, 0.7);
        assert!(theta(1, C64::new(0.0, 0.0), &n).unwrap().norm() < 1e-15);
        let z = Nome::real(0.0).unwrap();
        assert_eq!(theta(3, C64::new(0.4, 0.1), &z).unwrap(), C64::new(1.0, 0.0));
        let a = theta(1, C64::new(PI / 2.0, 0.0), &n).unwrap();
        let b = theta(2, C64::new(0.0, 0.0), &n).unwrap();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn product_forms_match_series() {
        let n = nome(0.3, 0.45);
        let y = C64::new(0.7, 0.2);
        for nu in 1..=4 {
            let series = theta(nu, y / 2.0, &n).unwrap();
            let prod = log_theta_half(nu, y, &n).unwrap().exp();
            assert!((series - prod).norm() < 1e-12 * series.norm().max(1.0), "nu={nu}");
        }
    }

    #[test]
    fn trivial_products() {
        let z = Nome::real(0.0).unwrap();
        let xi = C64::new(0.3, 0.2);
        assert_eq!(big_theta_nu(1, xi, &z).unwrap(), 1.0 - xi);
        let zz = C64::new(0.4, 0.0);
        assert_eq!(big_theta(zz, xi, &z), 1.0 - 2.0 * zz * xi + xi * xi);
        assert_eq!(euler_g(&z), C64::new(1.0, 0.0));
    }

    #[test]
    fn euler_g_at_tenth() {
        let g = euler_g(&Nome::real(0.1).unwrap());
        let direct: f64 = (1..20).map(|n| 1.0 - 10f64.powi(-2 * n)).product();
        assert!((g.re - direct).abs() < 1e-15);
        assert!((g.re - 0.989_900_000_100_01).abs() < 1e-12);
    }

    #[test]
    fn log_big_theta_consistent() {
        let n = nome(-0.1, 0.6);
        let z = C64::new(0.3, -0.2);
        let xi = (C64::i() * C64::new(0.4, 0.3)).exp();
        assert!((log_big_theta(z, xi, &n).exp() - big_theta(z, xi, &n)).norm() < 1e-13);
        for nu in 1..=4 {
            let a = log_big_theta_nu(nu, xi, &n).unwrap().exp();
            assert!((a - big_theta_nu(nu, xi, &n).unwrap()).norm() < 1e-13);
        }
    }
}
