//! Coupling constants and the quantities derived from them.

use crate::seriescore::{FromRational, Rational, Scalar};

/// Exponents `g0..g3` and the non-stationarity `kappa`. Everything else is
/// derived on demand, so the struct can never hold an inconsistent `lambda`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<S> {
    pub g: [S; 4],
    pub kappa: S,
}

impl<S: Scalar> Params<S> {
    pub fn new(g: [S; 4], kappa: S) -> Self {
        Params { g, kappa }
    }

    /// `(g0 + g1 + g2 + g3 - kappa) / 2`
    pub fn lambda(&self) -> S {
        let s = self.g.iter().cloned().fold(S::zero(), |a, b| a + b);
        (s - self.kappa.clone()) * S::from_ratio(1, 2)
    }

    /// Dual exponents `lambda - g_nu`.
    pub fn gt(&self) -> [S; 4] {
        let l = self.lambda();
        std::array::from_fn(|nu| l.clone() - self.g[nu].clone())
    }

    /// `g~_nu (g~_nu - 1)`
    pub fn gammas(&self) -> [S; 4] {
        self.gt().map(|t| t.clone() * (t - S::unit()))
    }

    pub fn g01(&self) -> S {
        self.g[0].clone() + self.g[1].clone()
    }

    /// `2n + g0 + g1`; the recursions see `n` only through this combination.
    pub fn p(&self, n: i64) -> S {
        S::from_i64(2 * n) + self.g01()
    }

    /// Zeroth-order eigenvalue `(n + (g0 + g1)/2)^2`.
    pub fn e0(&self, n: i64) -> S {
        let h = self.p(n) * S::from_ratio(1, 2);
        h.clone() * h
    }

    /// `-lambda` is a non-negative integer.
    pub fn neg_lambda_natural(&self) -> bool {
        (-self.lambda()).is_nonneg_integer()
    }

    /// `-(g0 + g1)` is a non-negative integer.
    pub fn neg_g01_natural(&self) -> bool {
        (-self.g01()).is_nonneg_integer()
    }

    /// Couplings whose duals all lie in {0, 1}: then every gamma vanishes and
    /// the solution is a single basis function.
    pub fn trivial_gamma(lambda: S, gt: [i64; 4]) -> Self {
        let g = std::array::from_fn(|nu| lambda.clone() - S::from_i64(gt[nu]));
        let kappa = lambda * S::from_i64(2) - S::from_i64(gt.iter().sum());
        Params { g, kappa }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Params<T> {
        Params {
            g: std::array::from_fn(|nu| f(&self.g[nu])),
            kappa: f(&self.kappa),
        }
    }
}

impl Params<Rational> {
    pub fn convert<T: FromRational>(&self) -> Params<T> {
        self.map(T::from_rational)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    #[test]
    fn derived_quantities() {
        let p = Params::new([r(1, 2), r(3, 2), r(1, 1), r(2, 1)], r(1, 1));
        assert_eq!(p.lambda(), r(2, 1));
        assert_eq!(p.gt(), [r(3, 2), r(1, 2), r(1, 1), r(0, 1)]);
        assert_eq!(p.gammas()[0], r(3, 4));
        assert_eq!(p.e0(1), r(4, 1));
        assert!(!p.neg_lambda_natural());
    }

    #[test]
    fn trivial_gamma_is_consistent() {
        let p = Params::trivial_gamma(r(7, 3), [1, 0, 1, 1]);
        assert_eq!(p.lambda(), r(7, 3));
        assert_eq!(p.gt(), [r(1, 1), r(0, 1), r(1, 1), r(1, 1)]);
        assert!(p.gammas().iter().all(|g| *g == r(0, 1)));
    }
}
