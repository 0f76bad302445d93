//! Exact symmetry and special-case checks.

use crate::basis::{f_contour, ContourConfig};
use crate::engines::alg1;
use crate::error::Result;
use crate::params::Params;
use crate::seriescore::{FromRational, Rational, Scalar, C64};
use crate::specfun::{jacobi_poly, Nome};

use super::norm_const;

/// `(g0 + g2 - 1, g1 + g3 - 1, g1 - g3, g0 - g2)`.
pub fn c_params<S: Scalar>(p: &Params<S>) -> [S; 4] {
    let [g0, g1, g2, g3] = p.g.clone();
    let one = S::unit();
    [
        g0.clone() + g2.clone() - one.clone(),
        g1.clone() + g3.clone() - one,
        g1 - g3,
        g0 - g2,
    ]
}

/// Inverse of [`c_params`] at fixed `kappa`.
pub fn from_c_params<S: Scalar>(c: &[S; 4], kappa: S) -> Params<S> {
    let half = S::from_ratio(1, 2);
    let one = S::unit();
    let g0 = (c[0].clone() + one.clone() + c[3].clone()) * half.clone();
    let g2 = (c[0].clone() + one.clone() - c[3].clone()) * half.clone();
    let g1 = (c[1].clone() + one.clone() + c[2].clone()) * half.clone();
    let g3 = (c[1].clone() + one - c[2].clone()) * half;
    Params::new([g0, g1, g2, g3], kappa)
}

/// Largest `|E^{(l)} - E^{(l)}_sigma|`, `l <= order`, after permuting the
/// c-parameters by `sigma` (new `c_i = c_{sigma(i)}`).
pub fn s4_check<S: Scalar>(n: i64, params: &Params<S>, order: usize, sigma: [usize; 4]) -> Result<f64> {
    let c = c_params(params);
    let permuted: [S; 4] = std::array::from_fn(|i| c[sigma[i]].clone());
    let q = from_c_params(&permuted, params.kappa.clone());
    let (_, e) = alg1(n, params, order)?;
    let (_, eq) = alg1(n, &q, order)?;
    Ok(e.series.max_abs_diff(&eq.series))
}

/// The four `q = 0` integral identities for Jacobi polynomials, labelled by
/// `(g~0, g~1, lambda)`: `(0,0,g)`, `(1,0,g+1)`, `(0,1,g+1)`, `(1,1,g+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiVariant {
    V1,
    V2,
    V3,
    V4,
}

impl JacobiVariant {
    pub const ALL: [JacobiVariant; 4] =
        [JacobiVariant::V1, JacobiVariant::V2, JacobiVariant::V3, JacobiVariant::V4];

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i.checked_sub(1)?).copied()
    }

    pub fn index(self) -> usize {
        self as usize + 1
    }

    /// Parameters realizing the variant for a given `g`.
    pub fn params(self, g: &Rational) -> Params<Rational> {
        let (gt, shift) = match self {
            JacobiVariant::V1 => ([0, 0, 0, 0], 0),
            JacobiVariant::V2 => ([1, 0, 0, 0], 1),
            JacobiVariant::V3 => ([0, 1, 0, 0], 1),
            JacobiVariant::V4 => ([1, 1, 0, 0], 1),
        };
        Params::trivial_gamma(g.clone() + Rational::from_i64(shift), gt)
    }
}

/// Both sides of an integral identity at one point.
#[derive(Debug, Clone, Copy)]
pub struct IntegralCheck {
    pub jacobi: C64,
    pub integral: C64,
    pub deviation: f64,
    pub pass: bool,
}

/// `P_n^{(g0-1/2, g1-1/2)}(z0)` against `N_n` times the contour integral.
pub fn jacobi_integral_check(
    variant: JacobiVariant,
    n: i64,
    g: &Rational,
    z0: C64,
) -> Result<IntegralCheck> {
    let p = variant.params(g);
    let half = Rational::from_ratio(1, 2);
    let jac = jacobi_poly(n, &(p.g[0].clone() - half.clone()), &(p.g[1].clone() - half))?;
    let jacobi = jac.to_c64().eval_c64(z0);
    let nn = C64::from_rational(&norm_const(n, &p)?);
    let nome = Nome::real(0.0)?;
    let integral = nn * f_contour(n, z0, &nome, &p, ContourConfig::default())?;
    let deviation = (jacobi - integral).norm();
    Ok(IntegralCheck {
        jacobi,
        integral,
        deviation,
        pass: deviation <= 1e-8 * jacobi.norm().max(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    #[test]
    fn c_params_round_trip() {
        let p = Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(2, 9));
        assert_eq!(from_c_params(&c_params(&p), p.kappa.clone()), p);
    }

    #[test]
    fn identity_permutation() {
        let p = Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(0, 1));
        assert_eq!(s4_check(1, &p, 3, [0, 1, 2, 3]).unwrap(), 0.0);
    }

    #[test]
    fn integral_variants() {
        let g = r(3, 4);
        for v in JacobiVariant::ALL {
            for n in 0..=6 {
                let c = jacobi_integral_check(v, n, &g, C64::new(0.3, 0.0)).unwrap();
                assert!(c.pass, "variant {} n={n}: {:?}", v.index(), c);
            }
        }
    }
}
