//! Process-wide comparison tolerances for the floating-point scalar mode.
//!
//! Stored as raw `f64` bits in atomics so that every thread sees the same
//! values without locking. Rational arithmetic ignores all of them.

use std::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_EPS_EQ: f64 = 1e-10;
pub const DEFAULT_EPS_DIV: f64 = 1e-12;
pub const DEFAULT_EPS_RES: f64 = 1e-8;

static EPS_EQ: AtomicU64 = AtomicU64::new(0x3DDB_7CDF_D9D7_BDBB); // 1e-10
static EPS_DIV: AtomicU64 = AtomicU64::new(0x3D71_9799_812D_EA11); // 1e-12
static EPS_RES: AtomicU64 = AtomicU64::new(0x3E45_798E_E230_8C3A); // 1e-8

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative equality threshold.
    pub eps_eq: f64,
    /// Smallest modulus accepted as a divisor.
    pub eps_div: f64,
    /// Absolute threshold below which a recursion denominator counts as resonant.
    pub eps_res: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_eq: DEFAULT_EPS_EQ,
            eps_div: DEFAULT_EPS_DIV,
            eps_res: DEFAULT_EPS_RES,
        }
    }
}

pub fn eps_eq() -> f64 {
    f64::from_bits(EPS_EQ.load(Ordering::Relaxed))
}

pub fn eps_div() -> f64 {
    f64::from_bits(EPS_DIV.load(Ordering::Relaxed))
}

pub fn eps_res() -> f64 {
    f64::from_bits(EPS_RES.load(Ordering::Relaxed))
}

pub fn current() -> Tolerances {
    Tolerances {
        eps_eq: eps_eq(),
        eps_div: eps_div(),
        eps_res: eps_res(),
    }
}

pub fn set(t: Tolerances) {
    EPS_EQ.store(t.eps_eq.to_bits(), Ordering::Relaxed);
    EPS_DIV.store(t.eps_div.to_bits(), Ordering::Relaxed);
    EPS_RES.store(t.eps_res.to_bits(), Ordering::Relaxed);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_patterns_match_defaults() {
        assert_eq!(f64::from_bits(0x3DDB_7CDF_D9D7_BDBB), DEFAULT_EPS_EQ);
        assert_eq!(f64::from_bits(0x3D71_9799_812D_EA11), DEFAULT_EPS_DIV);
        assert_eq!(f64::from_bits(0x3E45_798E_E230_8C3A), DEFAULT_EPS_RES);
    }
}
