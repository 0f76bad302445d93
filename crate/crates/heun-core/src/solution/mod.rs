//! Full solutions `psi_n(x, tau)`, `E_n(tau)` assembled from engine output and
//! basis functions, their numerical evaluation, and checks of the equations
//! they are meant to satisfy.

mod checks;
mod residual;

pub use checks::{
    c_params, from_c_params, jacobi_integral_check, s4_check, JacobiVariant, IntegralCheck,
};
pub use residual::{
    kernel_check, kernel_value, lemma42_check, residual, residual_scaled, Residual,
};

use crate::basis::f_table;
use crate::engines::{
    alg1, alg2, bridge, thm1_eigen, thm2_table, CoeffTable, EigenSeries, Normalization,
};
use crate::error::{HeunError, Result};
use crate::exec::Execution;
use crate::params::Params;
use crate::seriescore::{pochhammer, Module, QSeries, Scalar, ZPoly, C64};
use crate::specfun::{eta1_over_pi, log_theta_half, Nome};
use num_traits::Zero;
use std::str::FromStr;

/// Which engine produced the expansion coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Alg1,
    Alg2,
    Thm1,
    Thm2,
    Bridge,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Alg1 => "alg1",
            Mode::Alg2 => "alg2",
            Mode::Thm1 => "thm1",
            Mode::Thm2 => "thm2",
            Mode::Bridge => "bridge",
        }
    }

    pub const ALL: [Mode; 5] = [Mode::Alg1, Mode::Alg2, Mode::Thm1, Mode::Thm2, Mode::Bridge];
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode '{s}'"))
    }
}

/// Coefficient table and eigenvalue series from the chosen engine.
pub fn run_engine<S: Scalar>(
    n: i64,
    params: &Params<S>,
    order: usize,
    mode: Mode,
    exec: Execution,
) -> Result<(CoeffTable<S>, EigenSeries<S>)> {
    let fixed = |t: &CoeffTable<S>| {
        EigenSeries::new(QSeries::constant(t.couplings().e0(), order))
    };
    match mode {
        Mode::Alg1 => alg1(n, params, order),
        Mode::Alg2 => {
            let t = alg2(n, params, order)?;
            let e = fixed(&t);
            Ok((t, e))
        }
        Mode::Thm1 => thm1_eigen(n, params, order).map(|(e, t)| (t, e)),
        Mode::Thm2 => {
            let t = thm2_table(n, params, order, exec)?;
            let e = fixed(&t);
            Ok((t, e))
        }
        Mode::Bridge => bridge(&alg2(n, params, order)?),
    }
}

/// `N_n = (n + g0 + g1)_n / (4^n (lambda)_n)`.
pub fn norm_const<S: Scalar>(n: i64, params: &Params<S>) -> Result<S> {
    let num = pochhammer(&(S::from_i64(n) + params.g01()), n)?;
    let den = pochhammer(&params.lambda(), n)?;
    let four = if n >= 0 {
        S::from_i64(4).pow_u(n as u32)
    } else {
        S::from_i64(4).pow_u((-n) as u32).try_inv()?
    };
    (den * four)
        .try_inv()
        .map(|d| num * d)
        .map_err(|_| HeunError::pre(format!("normalization undefined: (lambda)_{n} vanishes")))
}

/// Truncated `P_n(z) = sum_l P_n^{(l)}(z) q^l` with its eigenvalue series.
#[derive(Clone, Debug)]
pub struct SeriesSolution<S> {
    pub n: i64,
    pub params: Params<S>,
    pub order: usize,
    pub poly: Vec<ZPoly<S>>,
    pub eigen: EigenSeries<S>,
    pub norm: S,
    pub mode: Mode,
    pub table: CoeffTable<S>,
}

/// `P^{(l)} = N_n sum_{l' <= l} sum_m alpha^{(l - l')}(m) f_m^{(l')}`.
pub fn assemble<S: Scalar>(
    n: i64,
    params: &Params<S>,
    order: usize,
    mode: Mode,
    exec: Execution,
) -> Result<SeriesSolution<S>> {
    let (table, eigen) = run_engine(n, params, order, mode, exec)?;
    assemble_from(table, eigen, params, mode)
}

/// Assembly from an existing coefficient table.
pub fn assemble_from<S: Scalar>(
    table: CoeffTable<S>,
    eigen: EigenSeries<S>,
    params: &Params<S>,
    mode: Mode,
) -> Result<SeriesSolution<S>> {
    let n = table.n();
    let order = table.order();
    let norm = norm_const(n, params)?;
    let w = order as i64;
    let hi = (n + w).max(-w);
    let basis = f_table(params, order, -w, hi)?;
    let mut poly = Vec::with_capacity(order + 1);
    for l in 0..=order {
        let mut acc = ZPoly::zero();
        for lp in 0..=l {
            let j = l - lp;
            for m in -(lp as i64)..=(n + j as i64) {
                let a = table.value(j, m);
                if a.is_zero() {
                    continue;
                }
                let f = basis.coeff(m, lp);
                if !f.is_zero() {
                    acc = acc + f.scale(&a);
                }
            }
        }
        poly.push(acc.scale(&norm));
    }
    Ok(SeriesSolution {
        n,
        params: params.clone(),
        order,
        poly,
        eigen,
        norm,
        mode,
        table,
    })
}

impl<S: Scalar> SeriesSolution<S> {
    pub fn tag(&self) -> Normalization {
        self.table.tag()
    }

    /// Truncated `P_n(z; q)`.
    pub fn eval_poly(&self, z: C64, q: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        let mut ql = C64::new(1.0, 0.0);
        for p in &self.poly {
            acc += p.eval_c64(z) * ql;
            ql *= q;
        }
        acc
    }

    /// Truncated `E_n`-series value `sum_l E^{(l)} q^l`.
    pub fn eval_eigen(&self, q: C64) -> C64 {
        self.eigen.series.eval(q)
    }

    fn g_c64(&self) -> [C64; 4] {
        self.params.g.clone().map(|g| g.to_c64())
    }

    /// `E_n = kappa^2 (1/12 - eta1/pi) - sum g(g-1) eta1/pi + sum E^{(l)} q^l`.
    pub fn total_e(&self, nome: &Nome) -> C64 {
        total_e_with(&self.params, nome, self.eval_eigen(nome.q()))
    }

    /// `psi_n(x, tau)`.
    pub fn eval_psi(&self, x: C64, tau: C64) -> Result<C64> {
        let nome = Nome::from_tau(tau)?;
        let pre = prefactor(&self.g_c64(), x, &nome)?;
        Ok(match pre {
            None => C64::new(0.0, 0.0),
            Some(p) => p * self.eval_poly(x.cos(), nome.q()),
        })
    }
}

/// Constant block of the eigenvalue plus a given `E`-series value.
pub fn total_e_with<S: Scalar>(params: &Params<S>, nome: &Nome, series_value: C64) -> C64 {
    let eta = eta1_over_pi(nome);
    let k = params.kappa.to_c64();
    let sg: C64 = params
        .g
        .iter()
        .map(|g| {
            let g = g.to_c64();
            g * (g - 1.0)
        })
        .sum();
    k * k * (1.0 / 12.0 - eta) - sg * eta + series_value
}

/// Magnitude below which a theta factor counts as a zero.
const THETA_ZERO: f64 = 1e-12;
/// Below this magnitude a non-integer power is considered branch-ambiguous.
const THETA_NEAR: f64 = 1e-6;

/// `(2 q^{1/4})^{-(g0+g1)} prod theta_{nu+1}(x/2)^{g_nu}`; `None` when a factor with
/// positive exponent vanishes.
pub fn prefactor(g: &[C64; 4], x: C64, nome: &Nome) -> Result<Option<C64>> {
    let i = C64::i();
    let tau = nome.tau()?;
    let mut log = -(g[0] + g[1]) * (2f64.ln() + i * std::f64::consts::PI * tau / 4.0);
    for nu in 0..4 {
        if g[nu].norm() == 0.0 {
            continue;
        }
        let l = log_theta_half(nu + 1, x, nome)?;
        let size = l.re.exp();
        let integer = (g[nu].re - g[nu].re.round()).abs() < 1e-12 && g[nu].im.abs() < 1e-12;
        if !l.re.is_finite() || size < THETA_ZERO {
            if integer && g[nu].re > 0.0 {
                return Ok(None);
            }
            return Err(HeunError::Domain(format!(
                "theta_{}(x/2) vanishes at x = {x} with exponent {}",
                nu + 1,
                g[nu]
            )));
        }
        if size < THETA_NEAR && !integer {
            return Err(HeunError::BranchHazard(format!(
                "theta_{}(x/2) is near a zero at x = {x}",
                nu + 1
            )));
        }
        log += g[nu] * l;
    }
    Ok(Some(log.exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seriescore::Rational;
    use crate::specfun::jacobi_poly;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    fn generic() -> Params<Rational> {
        Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(2, 9))
    }

    #[test]
    fn zeroth_order_is_jacobi() {
        let p = generic();
        for n in 0..=5 {
            let s = assemble(n, &p, 2, Mode::Alg1, Execution::Sequential).unwrap();
            let half = r(1, 2);
            let j = jacobi_poly(n, &(p.g[0].clone() - half.clone()), &(p.g[1].clone() - half)).unwrap();
            assert_eq!(s.poly[0], j, "n={n}");
            for (l, pl) in s.poly.iter().enumerate() {
                assert!(pl.degree().is_none_or(|d| d as i64 <= n + l as i64));
            }
        }
    }

    #[test]
    fn negative_mode_vanishes_at_low_order() {
        let p = generic();
        let s = assemble(-2, &p, 3, Mode::Alg1, Execution::Sequential).unwrap();
        assert!(s.poly[0].is_zero() && s.poly[1].is_zero());
    }

    #[test]
    fn corollary_solution_is_one_basis_function() {
        let p = Params::trivial_gamma(r(5, 4), [1, 0, 1, 1]);
        let n = 2;
        let s = assemble(n, &p, 4, Mode::Alg1, Execution::Sequential).unwrap();
        let b = f_table(&p, 4, n, n).unwrap();
        for l in 0..=4 {
            assert_eq!(s.poly[l], b.coeff(n, l).scale(&s.norm));
        }
    }

    #[test]
    fn modes_agree_where_they_should() {
        let p = generic();
        let a = assemble(1, &p, 3, Mode::Alg1, Execution::Sequential).unwrap();
        let b = assemble(1, &p, 3, Mode::Bridge, Execution::Sequential).unwrap();
        assert_eq!(a.poly, b.poly);
        let c = assemble(1, &p, 3, Mode::Alg2, Execution::Sequential).unwrap();
        let d = assemble(1, &p, 3, Mode::Thm2, Execution::Parallel).unwrap();
        assert_eq!(c.poly, d.poly);
    }

    #[test]
    fn trigonometric_energy() {
        let p = generic();
        let s = assemble(1, &p, 2, Mode::Alg1, Execution::Sequential).unwrap();
        let nome = Nome::real(0.0).unwrap();
        let sg: f64 = p.g.iter().map(|g| {
            let g = crate::seriescore::rational_to_f64(g);
            g * (g - 1.0)
        }).sum();
        let expect = -sg / 12.0 + crate::seriescore::rational_to_f64(&p.e0(1));
        assert!((s.total_e(&nome).re - expect).abs() < 1e-14);
    }

    #[test]
    fn psi_vanishes_at_theta_zero() {
        let p = Params::trivial_gamma(r(3, 1), [1, 0, 0, 0]);
        let s = assemble(1, &p, 2, Mode::Alg1, Execution::Sequential).unwrap();
        let v = s.eval_psi(C64::new(0.0, 0.0), C64::new(0.1, 1.0)).unwrap();
        assert_eq!(v, C64::new(0.0, 0.0));
    }

    #[test]
    fn trigonometric_limit_of_psi() {
        let p = generic();
        let s = assemble(2, &p, 4, Mode::Alg1, Execution::Sequential).unwrap();
        let x = C64::new(0.7, 0.2);
        let tau = C64::new(0.0, 12.0);
        let g = s.g_c64();
        let expect = (x / 2.0).sin().powc(g[0]) * (x / 2.0).cos().powc(g[1])
            * s.poly[0].eval_c64(x.cos());
        let v = s.eval_psi(x, tau).unwrap();
        assert!((v - expect).norm() < 1e-10 * expect.norm());
    }

    #[test]
    fn norm_examples() {
        let p = generic();
        assert_eq!(norm_const(0, &p).unwrap(), r(1, 1));
        let expect = (r(1, 1) + p.g01()) / (r(4, 1) * p.lambda());
        assert_eq!(norm_const(1, &p).unwrap(), expect);
    }
}
