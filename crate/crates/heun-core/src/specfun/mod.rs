//! Elliptic and classical special functions: theta functions and their product
//! forms, the Weierstrass function with periods (2π, 2πτ) and its Fourier data,
//! Jacobi and Gegenbauer polynomials, and the rescaling to general half-period.

mod poly;
mod scaling;
mod theta;
mod wp;

pub use poly::{gegenbauer, gegenbauer_explicit, jacobi_poly};
pub use scaling::OmegaScale;
pub use theta::{
    big_theta, big_theta_nu, euler_g, log_big_theta, log_big_theta_nu, log_euler_g, log_theta_half,
    theta,
};
pub use wp::{eta1_over_pi, eta1_over_pi_series, wp, wp_fourier, wp_fourier_series, wp_shifted};

use crate::error::{HeunError, Result};
use crate::seriescore::C64;
use std::f64::consts::PI;

/// Relative size below which an infinite sum or product is cut off.
pub(crate) const SERIES_CUTOFF: f64 = 1e-18;

/// The nome `q = exp(iπτ)`, optionally remembering `τ` so that fractional
/// powers of `q` follow the branch fixed by `τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nome {
    q: C64,
    tau: Option<C64>,
}

impl Nome {
    pub fn from_q(q: C64) -> Result<Self> {
        if q.norm() >= 1.0 {
            return Err(HeunError::Domain(format!("|q| = {} is not below 1", q.norm())));
        }
        Ok(Nome { q, tau: None })
    }

    pub fn from_tau(tau: C64) -> Result<Self> {
        if tau.im <= 0.0 {
            return Err(HeunError::Domain(format!("Im(tau) = {} must be positive", tau.im)));
        }
        Ok(Nome {
            q: (C64::i() * PI * tau).exp(),
            tau: Some(tau),
        })
    }

    /// Real nome in `[0, 1)`.
    pub fn real(q: f64) -> Result<Self> {
        Self::from_q(C64::new(q, 0.0))
    }

    pub fn q(&self) -> C64 {
        self.q
    }

    /// `τ`; recovered from the principal logarithm when built from `q`.
    pub fn tau(&self) -> Result<C64> {
        match self.tau {
            Some(t) => Ok(t),
            None if self.q.norm() == 0.0 => Err(HeunError::Domain("tau undefined at q = 0".into())),
            None => Ok(self.q.ln() / (C64::i() * PI)),
        }
    }

    /// `q^{1/4}` on the branch `exp(iπτ/4)`.
    pub fn q_quarter(&self) -> C64 {
        match self.tau {
            Some(t) => (C64::i() * PI * t / 4.0).exp(),
            None if self.q.norm() == 0.0 => C64::new(0.0, 0.0),
            None => self.q.powf(0.25),
        }
    }

    pub fn half_periods(&self) -> Result<HalfPeriods> {
        HalfPeriods::new(self.tau()?)
    }
}

/// `ω0 = 0, ω1 = π, ω2 = -π - πτ, ω3 = πτ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPeriods {
    pub omega: [C64; 4],
}

impl HalfPeriods {
    pub fn new(tau: C64) -> Result<Self> {
        if tau.im <= 0.0 {
            return Err(HeunError::Domain("Im(tau) must be positive".into()));
        }
        let pi = C64::new(PI, 0.0);
        Ok(HalfPeriods {
            omega: [C64::new(0.0, 0.0), pi, -pi - pi * tau, pi * tau],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nome_from_tau() {
        let n = Nome::from_tau(C64::new(0.1, 0.8)).unwrap();
        assert!((n.q() - (C64::i() * PI * C64::new(0.1, 0.8)).exp()).norm() < 1e-15);
        assert!((n.q_quarter().powi(4) - n.q()).norm() < 1e-15);
        assert!((n.tau().unwrap() - C64::new(0.1, 0.8)).norm() < 1e-15);
        assert!(Nome::from_tau(C64::new(0.0, -1.0)).is_err());
        assert!(Nome::real(1.0).is_err());
    }

    #[test]
    fn tau_roundtrip_from_q() {
        let n = Nome::real(0.2).unwrap();
        let t = n.tau().unwrap();
        let back = Nome::from_tau(t).unwrap();
        assert!((back.q() - n.q()).norm() < 1e-15);
    }
}
