//! Rescaling from the half-period π to a general nonzero ω₁.

use crate::error::{HeunError, Result};
use crate::seriescore::C64;
use std::f64::consts::PI;

/// The map `ψ_ω(x) = (π/ω₁)^{1/2} ψ(πx/ω₁)`, `E_ω = (π/ω₁)² E`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaScale {
    omega1: C64,
}

impl OmegaScale {
    pub fn new(omega1: C64) -> Result<Self> {
        if omega1.norm() == 0.0 {
            return Err(HeunError::pre("omega1 must be nonzero"));
        }
        Ok(OmegaScale { omega1 })
    }

    pub fn omega1(&self) -> C64 {
        self.omega1
    }

    /// `s = π/ω₁`.
    pub fn factor(&self) -> C64 {
        PI / self.omega1
    }

    pub fn map_x(&self, x: C64) -> C64 {
        self.factor() * x
    }

    pub fn map_energy(&self, e: C64) -> C64 {
        self.factor() * self.factor() * e
    }

    /// Value of the rescaled wave function given the ω₁ = π one.
    pub fn map_psi(&self, psi: impl Fn(C64) -> C64, x: C64) -> C64 {
        self.factor().sqrt() * psi(self.map_x(x))
    }

    /// `℘(x | ω₁, ω₁τ) = s² ℘(s x | π, πτ)`.
    pub fn wp(&self, x: C64, tau: C64) -> Result<C64> {
        let s = self.factor();
        Ok(s * s * super::wp(s * x, tau)?)
    }

    /// Half-periods `(0, ω₁, -ω₁ - ω₁τ, ω₁τ)`.
    pub fn omegas(&self, tau: C64) -> [C64; 4] {
        let w = self.omega1;
        [C64::new(0.0, 0.0), w, -w - w * tau, w * tau]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_at_pi() {
        let s = OmegaScale::new(C64::new(PI, 0.0)).unwrap();
        let e = C64::new(1.3, -0.4);
        assert!((s.map_energy(e) - e).norm() < 1e-15);
        let x = C64::new(0.2, 0.1);
        assert!((s.map_psi(|y| y * y, x) - x * x).norm() < 1e-15);
    }

    #[test]
    fn energy_quarter_at_two_pi() {
        let s = OmegaScale::new(C64::new(2.0 * PI, 0.0)).unwrap();
        assert!((s.map_energy(C64::new(4.0, 0.0)) - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(OmegaScale::new(C64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn scaled_wp_is_periodic_in_scaled_lattice() {
        let s = OmegaScale::new(C64::new(1.7, 0.0)).unwrap();
        let tau = C64::new(0.1, 1.1);
        let x = C64::new(0.3, 0.2);
        let a = s.wp(x, tau).unwrap();
        let b = s.wp(x + 2.0 * s.omega1(), tau).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm());
    }
}
