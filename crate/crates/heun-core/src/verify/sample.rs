//! Reproducible random parameter points.

use crate::params::Params;
use crate::seriescore::{Rational, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded generator of small rationals and parameter points.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// `p/q` with `|p| <= 12`, `2 <= q <= 9`.
    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(-12..=12);
        let q = self.rng.gen_range(2..=9);
        Rational::from_ratio(p, q)
    }

    /// Rational in `[-1, 1]` with denominator up to 13.
    pub fn small_rational(&mut self) -> Rational {
        let q = self.rng.gen_range(5..=13);
        let p = self.rng.gen_range(-q..=q);
        Rational::from_ratio(p, q)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn unit_f64(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Random couplings with `-lambda` not a non-negative integer. `kappa`
    /// is drawn too unless a fixed value is given.
    pub fn params(&mut self, kappa: Option<Rational>) -> Params<Rational> {
        loop {
            let g = std::array::from_fn(|_| self.rational());
            let k = kappa.clone().unwrap_or_else(|| self.rational());
            let p = Params::new(g, k);
            if !p.neg_lambda_natural() {
                return p;
            }
        }
    }

    /// Draw until `accept` succeeds, giving up after `tries` attempts.
    pub fn params_where(
        &mut self,
        kappa: Option<Rational>,
        tries: usize,
        accept: impl Fn(&Params<Rational>) -> bool,
    ) -> Option<Params<Rational>> {
        (0..tries).map(|_| self.params(kappa.clone())).find(|p| accept(p))
    }
}

/// Compact `g=[..] kappa=..` rendering for case labels.
pub fn show(p: &Params<Rational>) -> String {
    let g: Vec<String> = p.g.iter().map(|x| x.to_string()).collect();
    format!("g=[{}] kappa={}", g.join(","), p.kappa)
}
