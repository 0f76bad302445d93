//! Reduced couplings: the recursions see `(n, g0..g3, kappa)` only through
//! `P = 2n + g0 + g1`, `kappa` and the four products `g~_nu (g~_nu - 1)`.

use crate::params::Params;
use crate::seriescore::{QSeries, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Couplings<S> {
    pub p: S,
    pub kappa: S,
    pub gamma: [S; 4],
}

impl<S: Scalar> Couplings<S> {
    pub fn from_params(params: &Params<S>, n: i64) -> Self {
        Couplings {
            p: params.p(n),
            kappa: params.kappa.clone(),
            gamma: params.gammas(),
        }
    }

    /// `gamma_k^mu`: `gamma0 + (-1)^mu gamma1` for even `k`, `(-1)^mu gamma2 + gamma3` for odd `k`.
    pub fn gamma_coeff(&self, k: usize, mu: i64) -> S {
        let [g0, g1, g2, g3] = &self.gamma;
        let odd_mu = mu.rem_euclid(2) == 1;
        match (k.is_multiple_of(2), odd_mu) {
            (true, false) => g0.clone() + g1.clone(),
            (true, true) => g0.clone() - g1.clone(),
            (false, false) => g2.clone() + g3.clone(),
            (false, true) => g3.clone() - g2.clone(),
        }
    }

    /// `b^{(l)}(k) = k (k + P) - kappa l`.
    pub fn b(&self, l: usize, k: i64) -> S {
        S::from_i64(k) * (S::from_i64(k) + self.p.clone()) - self.kappa.clone() * S::from_i64(l as i64)
    }

    /// `(P/2)^2`.
    pub fn e0(&self) -> S {
        let h = self.p.clone() * S::from_ratio(1, 2);
        h.clone() * h
    }

    /// Step weight `S_mu(k)`: `mu gamma_0^mu` for `k = 0, mu > 0`; `|mu| gamma_k^mu` for `k >= 1`.
    pub fn step_weight(&self, mu: i64, k: usize) -> S {
        if mu == 0 || (k == 0 && mu < 0) {
            return S::zero();
        }
        S::from_i64(mu.abs()) * self.gamma_coeff(k, mu)
    }

    /// `S_mu` as a q-series: coefficient `S_mu(k)` at `q^{k|mu|}`.
    pub fn step_series(&self, mu: i64, order: usize) -> QSeries<S> {
        let a = mu.unsigned_abs() as usize;
        let mut s = QSeries::zero(order);
        let mut k = 0;
        while k * a <= order {
            s.set(k * a, self.step_weight(mu, k));
            k += 1;
        }
        s
    }

    /// The reflected couplings `P -> -P`, `gamma0 <-> gamma3`, `gamma1 <-> gamma2`.
    /// This flips the sign inside every `b^{(0)}` and swaps `gamma_0^mu` with `gamma_1^mu`.
    pub fn reflected(&self) -> Self {
        let [g0, g1, g2, g3] = self.gamma.clone();
        Couplings {
            p: -self.p.clone(),
            kappa: self.kappa.clone(),
            gamma: [g3, g2, g1, g0],
        }
    }
}

/// `gamma_k^mu` for the given parameters.
pub fn gamma_coeff<S: Scalar>(k: usize, mu: i64, params: &Params<S>) -> S {
    Couplings::from_params(params, 0).gamma_coeff(k, mu)
}

/// `b_n^{(l)}(k) = k (k + 2n + g0 + g1) - kappa l`.
pub fn b_denom<S: Scalar>(n: i64, l: usize, k: i64, params: &Params<S>) -> S {
    Couplings::from_params(params, n).b(l, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seriescore::{Rational, C64};
    use crate::specfun::wp_fourier_series;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    fn with_gt(gt: [Rational; 4]) -> Params<Rational> {
        // lambda = 0 makes g = -g~; kappa then follows from the sum rule
        let g = gt.clone().map(|t| -t);
        let kappa = g.iter().cloned().fold(r(0, 1), |a, b| a + b);
        Params::new(g, kappa)
    }

    #[test]
    fn gamma_examples() {
        let p = with_gt([r(2, 1), r(3, 1), r(0, 1), r(0, 1)]);
        assert_eq!(p.lambda(), r(0, 1));
        assert_eq!(gamma_coeff(0, 2, &p), r(8, 1));
        let p = with_gt([r(0, 1), r(0, 1), r(2, 1), r(2, 1)]);
        assert_eq!(gamma_coeff(1, 1, &p), r(0, 1));
        let p = with_gt([r(1, 1), r(0, 1), r(1, 1), r(0, 1)]);
        for k in 0..5 {
            for mu in -4..5 {
                assert_eq!(gamma_coeff(k, mu, &p), r(0, 1));
            }
        }
    }

    #[test]
    fn gamma_periodicity() {
        let p = Params::new([r(1, 3), r(2, 5), r(-1, 7), r(3, 2)], r(1, 9));
        for k in 0..4 {
            for mu in -5..5 {
                assert_eq!(gamma_coeff(k, mu, &p), gamma_coeff(k + 2, mu + 2, &p));
            }
        }
    }

    #[test]
    fn b_examples() {
        let p = Params::new([r(1, 2), r(1, 2), r(0, 1), r(0, 1)], r(3, 1));
        assert_eq!(b_denom(1, 0, 0, &p), r(0, 1));
        assert_eq!(b_denom(1, 2, 0, &p), r(-6, 1));
        assert_eq!(b_denom(1, 0, -1, &p), r(-2, 1));
    }

    #[test]
    fn step_series_is_weighted_fourier_sum() {
        let p = Params::new([r(1, 3), r(2, 5), r(-1, 7), r(3, 2)], r(1, 9));
        let c = Couplings::from_params(&p, 1);
        for mu in [-3i64, -2, -1, 1, 2, 3] {
            let mut acc = QSeries::<Rational>::zero(8);
            for nu in 0..4 {
                let s = wp_fourier_series::<Rational>(nu, mu, 8).unwrap();
                acc = acc.try_add(&s.scale(&c.gamma[nu])).unwrap();
            }
            assert_eq!(acc, c.step_series(mu, 8), "mu={mu}");
        }
        let cf = Couplings::<C64>::from_params(&p.convert(), 1);
        assert!(cf.step_series(2, 6).approx_eq(&c.step_series(2, 6).to_c64()));
    }
}
