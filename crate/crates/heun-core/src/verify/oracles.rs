//! Low-order closed forms written out by hand, independent of the engines.
//!
//! Everything is expressed through `P = 2n + g0 + g1`, `kappa` and the four
//! couplings `gamma_k^mu` with `k, mu in {0, 1}` (the only ones entering at
//! orders one and two).

use crate::error::Result;
use crate::params::Params;
use crate::seriescore::Scalar;

/// The inputs shared by all closed forms.
#[derive(Clone, Debug)]
pub struct LowOrder<S> {
    pub p: S,
    pub kappa: S,
    /// `gamma_0^1 = gamma_0 - gamma_1`
    pub g01: S,
    /// `gamma_0^0 = gamma_0 + gamma_1`
    pub g00: S,
    /// `gamma_1^1 = gamma_3 - gamma_2`
    pub g11: S,
    /// `gamma_1^0 = gamma_3 + gamma_2`
    pub g10: S,
}

impl<S: Scalar> LowOrder<S> {
    pub fn new(n: i64, params: &Params<S>) -> Self {
        let [c0, c1, c2, c3] = params.gammas();
        LowOrder {
            p: params.p(n),
            kappa: params.kappa.clone(),
            g01: c0.clone() - c1.clone(),
            g00: c0 + c1,
            g11: c3.clone() - c2.clone(),
            g10: c3 + c2,
        }
    }

    /// `b^{(l)}(k) = k (k + P) - kappa l`
    pub fn b(&self, l: i64, k: i64) -> S {
        S::from_i64(k) * (S::from_i64(k) + self.p.clone()) - self.kappa.clone() * S::from_i64(l)
    }

    fn ib(&self, l: i64, k: i64) -> Result<S> {
        self.b(l, k).try_inv()
    }

    /// `1 / (P + c + d kappa)`
    fn ip(&self, c: i64, d: i64) -> Result<S> {
        (self.p.clone() + S::from_i64(c) + self.kappa.clone() * S::from_i64(d)).try_inv()
    }

    /// `1 / (2 (P + c) + d kappa)`
    fn ip2(&self, c: i64, d: i64) -> Result<S> {
        (S::from_i64(2) * (self.p.clone() + S::from_i64(c)) + self.kappa.clone() * S::from_i64(d))
            .try_inv()
    }

    /// First-order eigenvalue in the `P` form.
    pub fn e1(&self) -> Result<S> {
        Ok(self.g01.clone() * self.g11.clone() * (self.ip(-1, 0)? - self.ip(1, -1)?))
    }

    /// Second-order eigenvalue in the `P` form.
    pub fn e2(&self) -> Result<S> {
        let two = S::from_i64(2);
        let a = self.ip(-1, 0)?; // 1/(P-1)
        let b = self.ip(1, -2)?; // 1/(P+1-2k)
        let c = self.ip(-1, 1)?; // 1/(P-1+k)
        let d = self.ip(1, -1)?; // 1/(P+1-k)
        let e = self.ip2(-2, 0)?; // 1/(2(P-2))
        let f = self.ip2(2, -2)?; // 1/(2(P+2)-2k)
        let g01s = self.g01.clone() * self.g01.clone();
        let g11s = self.g11.clone() * self.g11.clone();
        let mut t = g01s.clone() * (a.clone() - b.clone());
        t = t + g11s.clone() * (c.clone() - d.clone());
        t = t + S::from_i64(4) * self.g00.clone() * self.g10.clone() * (e.clone() - f.clone());
        t = t - two.clone()
            * g01s.clone()
            * self.g10.clone()
            * (e.clone() * a.clone() - a.clone() * b.clone() + b.clone() * f.clone());
        t = t - two
            * self.g00.clone()
            * g11s.clone()
            * (e.clone() * c.clone() - c.clone() * d.clone() + d.clone() * f.clone());
        let bracket = c.clone() * a.clone() * a.clone() - b.clone() * d.clone() * d.clone()
            - c.clone() * a.clone() * d.clone()
            + a.clone() * d.clone() * b.clone()
            - e * a * c
            + d * b * f;
        Ok(t - g01s * g11s * bracket)
    }

    /// `a^{(0)}(-1)`
    pub fn a0_m1(&self) -> Result<S> {
        Ok(self.g01.clone() * self.ib(0, -1)?)
    }

    /// `a^{(0)}(-2)`
    pub fn a0_m2(&self) -> Result<S> {
        let inner = S::from_i64(2) * self.g00.clone()
            + self.g01.clone() * self.g01.clone() * self.ib(0, -1)?;
        Ok(inner * self.ib(0, -2)?)
    }

    /// `a^{(0)}(-3)`
    pub fn a0_m3(&self) -> Result<S> {
        let inner = S::from_i64(3)
            + S::from_i64(2) * self.g00.clone() * (self.ib(0, -2)? + self.ib(0, -1)?)
            + self.g01.clone() * self.g01.clone() * self.ib(0, -2)? * self.ib(0, -1)?;
        Ok(self.g01.clone() * self.ib(0, -3)? * inner)
    }

    /// `a^{(1)}(1)`
    pub fn a1_p1(&self) -> Result<S> {
        Ok(self.g11.clone() * self.ib(1, 1)?)
    }

    /// `a^{(1)}(-1)`
    pub fn a1_m1(&self) -> Result<S> {
        let (b0m1, b0m2, b11) = (self.ib(0, -1)?, self.ib(0, -2)?, self.ib(1, 1)?);
        let inner = S::unit()
            + S::from_i64(2) * self.g00.clone() * (b0m2.clone() + b11.clone())
            + self.g01.clone() * self.g01.clone() * b0m1.clone() * (b0m2 - b0m1 - b11);
        Ok(self.g11.clone() * self.ib(1, -1)? * inner)
    }

    /// `a^{(2)}(2)`, from the recursion step `(gamma_1^1 a^{(1)}(1) + 2 gamma_1^0) / b^{(2)}(2)`.
    pub fn a2_p2(&self) -> Result<S> {
        let inner = self.g11.clone() * self.a1_p1()? + S::from_i64(2) * self.g10.clone();
        Ok(inner * self.ib(2, 2)?)
    }

    /// `a^{(2)}(1)`
    pub fn a2_p1(&self) -> Result<S> {
        let (b0m1, b22, b11) = (self.ib(0, -1)?, self.ib(2, 2)?, self.ib(1, 1)?);
        let inner = S::unit()
            + S::from_i64(2) * self.g10.clone() * (b0m1.clone() + b22.clone())
            + self.g11.clone()
                * self.g11.clone()
                * (b22 * b11.clone() - b11.clone() * b11.clone() - b11 * b0m1);
        Ok(self.g01.clone() * self.ib(2, 1)? * inner)
    }

    /// First-order eigenvalue through the `b` denominators.
    pub fn e1_b(&self) -> Result<S> {
        Ok(-(self.g01.clone() * self.g11.clone()) * (self.ib(0, -1)? + self.ib(1, 1)?))
    }

    /// Second-order eigenvalue through the `b` denominators.
    pub fn e2_b(&self) -> Result<S> {
        let (b0m1, b0m2) = (self.ib(0, -1)?, self.ib(0, -2)?);
        let (b1m1, b11) = (self.ib(1, -1)?, self.ib(1, 1)?);
        let (b21, b22) = (self.ib(2, 1)?, self.ib(2, 2)?);
        let g01s = self.g01.clone() * self.g01.clone();
        let g11s = self.g11.clone() * self.g11.clone();
        let two = S::from_i64(2);
        let mut t = -(g01s.clone() * (b0m1.clone() + b21.clone()));
        t = t - g11s.clone() * (b1m1.clone() + b11.clone());
        t = t - S::from_i64(4) * self.g00.clone() * self.g10.clone() * (b0m2.clone() + b22.clone());
        t = t - two.clone()
            * g01s.clone()
            * self.g10.clone()
            * (b0m2.clone() * b0m1.clone() + b0m1.clone() * b21.clone() + b21.clone() * b22.clone());
        t = t - two
            * self.g00.clone()
            * g11s.clone()
            * (b0m2.clone() * b1m1.clone() + b1m1.clone() * b11.clone() + b11.clone() * b22.clone());
        let bracket = b1m1.clone() * b0m1.clone() * b0m1.clone()
            + b21.clone() * b11.clone() * b11.clone()
            + b1m1.clone() * b0m1.clone() * b11.clone()
            + b0m1.clone() * b11.clone() * b21.clone()
            - b0m2 * b0m1 * b1m1
            - b11 * b21 * b22;
        Ok(t + g01s * g11s * bracket)
    }

    /// The seven tabulated coefficients as `(l, k, value)` with `k = m - n`.
    pub fn table(&self) -> Result<Vec<(usize, i64, S)>> {
        Ok(vec![
            (0, -1, self.a0_m1()?),
            (0, -2, self.a0_m2()?),
            (0, -3, self.a0_m3()?),
            (1, 1, self.a1_p1()?),
            (1, -1, self.a1_m1()?),
            (2, 2, self.a2_p2()?),
            (2, 1, self.a2_p1()?),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::alg1;
    use crate::seriescore::Rational;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    #[test]
    fn two_forms_of_each_eigenvalue_agree() {
        let p = Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(2, 9));
        let o = LowOrder::new(2, &p);
        assert_eq!(o.e1().unwrap(), o.e1_b().unwrap());
        assert_eq!(o.e2().unwrap(), o.e2_b().unwrap());
    }

    #[test]
    fn closed_forms_match_recursion() {
        let p = Params::new([r(2, 3), r(-1, 7), r(7, 5), r(1, 4)], r(-3, 11));
        for n in [0, 1, 3] {
            let o = LowOrder::new(n, &p);
            let (t, e) = alg1(n, &p, 3).unwrap();
            assert_eq!(*e.coeff(1), o.e1().unwrap());
            assert_eq!(*e.coeff(2), o.e2().unwrap());
            for (l, k, v) in o.table().unwrap() {
                assert_eq!(t.value(l, n + k), v, "l={l} k={k}");
            }
        }
    }
}
