//! The Weierstrass function with periods (2π, 2πτ), `η₁/π`, and the Fourier
//! coefficients of the four shifted copies `℘(x + ω_ν)`.

use super::{HalfPeriods, Nome, SERIES_CUTOFF};
use crate::error::{HeunError, Result};
use crate::seriescore::{QSeries, Scalar, C64};

/// `η₁/π = 1/12 - Σ 2q^{2n}/(1 - q^{2n})²`.
pub fn eta1_over_pi(nome: &Nome) -> C64 {
    let q2 = nome.q() * nome.q();
    let mut p = q2;
    let mut acc = C64::new(1.0 / 12.0, 0.0);
    while p.norm() > SERIES_CUTOFF {
        let d = 1.0 - p;
        acc -= 2.0 * p / (d * d);
        p *= q2;
    }
    acc
}

/// `η₁/π` as a truncated series, expanding each `q^{2n}/(1-q^{2n})²` as `Σ_j j q^{2nj}`.
pub fn eta1_over_pi_series<S: Scalar>(order: usize) -> QSeries<S> {
    let mut s = QSeries::constant(S::from_ratio(1, 12), order);
    for n in 1..=order / 2 {
        let mut j = 1;
        while 2 * n * j <= order {
            let k = 2 * n * j;
            let c = s.coeff(k).clone() - S::from_i64(2 * j as i64);
            s.set(k, c);
            j += 1;
        }
    }
    s
}

/// `℘(x | π, πτ) = -η₁/π + Σ_n 1/(4 sin²((x + 2nπτ)/2))`.
pub fn wp(x: C64, tau: C64) -> Result<C64> {
    let nome = Nome::from_tau(tau)?;
    let two_pi_tau = 2.0 * std::f64::consts::PI * tau;
    let term = |n: i64| -> Result<C64> {
        let s = ((x + n as f64 * two_pi_tau) / 2.0).sin();
        if s.norm() < 1e-7 {
            return Err(HeunError::Domain(format!("x = {x} is at a lattice point")));
        }
        Ok(1.0 / (4.0 * s * s))
    };
    let mut acc = term(0)?;
    for n in 1..100_000 {
        let t = term(n)? + term(-n)?;
        acc += t;
        if t.norm() < 1e-16 * acc.norm().max(1.0) {
            break;
        }
    }
    Ok(acc - eta1_over_pi(&nome))
}

/// `℘(x + ω_ν)`.
pub fn wp_shifted(nu: usize, x: C64, tau: C64) -> Result<C64> {
    let w = HalfPeriods::new(tau)?;
    let shift = *w
        .omega
        .get(nu)
        .ok_or_else(|| HeunError::pre(format!("half-period index {nu} not in 0..=3")))?;
    wp(x + shift, tau)
}

fn check_fourier(nu: usize, mu: i64) -> Result<()> {
    if nu > 3 {
        return Err(HeunError::pre(format!("half-period index {nu} not in 0..=3")));
    }
    if mu == 0 {
        return Err(HeunError::pre("Fourier index must be nonzero"));
    }
    Ok(())
}

/// `(S_ν)_μ` evaluated at a numeric nome, through the `|μ|` forms so that no
/// negative power of `q` is ever formed.
pub fn wp_fourier(nu: usize, mu: i64, nome: &Nome) -> Result<C64> {
    check_fourier(nu, mu)?;
    let q = nome.q();
    let a = mu.unsigned_abs() as u32;
    let sign = if mu % 2 == 0 { 1.0 } else { -1.0 };
    let denom = 1.0 - q.powu(2 * a);
    let lead = if nu <= 1 { (a as i64 - mu) as u32 } else { a };
    let v = a as f64 * q.powu(lead) / denom;
    Ok(if nu == 1 || nu == 2 { sign * v } else { v })
}

/// `(S_ν)_μ` as a q-series, from the forms with `|μ|`:
/// `(S0)_μ = |μ| q^{|μ|-μ}/(1-q^{2|μ|})`, `(S1)_μ = (-1)^μ (S0)_μ`,
/// `(S3)_μ = |μ| q^{|μ|}/(1-q^{2|μ|})`, `(S2)_μ = (-1)^μ (S3)_μ`.
pub fn wp_fourier_series<S: Scalar>(nu: usize, mu: i64, order: usize) -> Result<QSeries<S>> {
    check_fourier(nu, mu)?;
    let a = mu.unsigned_abs() as usize;
    let lead = if nu <= 1 { (a as i64 - mu) as usize } else { a };
    let sign = if !nu.is_multiple_of(3) && mu % 2 != 0 { -1 } else { 1 };
    let mut s = QSeries::zero(order);
    let mut k = lead;
    while k <= order {
        s.set(k, S::from_i64(sign * a as i64));
        k += 2 * a;
    }
    Ok(s)
}
