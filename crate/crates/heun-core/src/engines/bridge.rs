//! Passing between the two normalizations, and the closed eigenvalue forms
//! that follow from it.

use super::table::{CoeffTable, EigenSeries, Normalization};
use crate::error::{HeunError, Result};
use crate::seriescore::{QSeries, Scalar, C64};

/// Rescale a fixed-eigenvalue table by `1/alpha(n)` and read off the eigenvalue
/// series `E^{(0)} + kappa q d/dq log alpha(n)`.
pub fn bridge<S: Scalar>(table: &CoeffTable<S>) -> Result<(CoeffTable<S>, EigenSeries<S>)> {
    if table.tag() != Normalization::II {
        return Err(HeunError::pre("bridge expects a fixed-eigenvalue table"));
    }
    let n = table.n();
    let order = table.order();
    let an = table.series_at(n);
    if !an.coeff(0).is_unit_value() {
        return Err(HeunError::NonUnit);
    }
    let inv = an.try_inv()?;
    let c = table.couplings().clone();
    let mut out = CoeffTable::zeros(n, order, Normalization::I, c.clone());
    for l in 0..=order {
        let (lo, hi) = out.window(l);
        for m in lo..=hi {
            let mut s = S::zero();
            for j in 0..=l {
                let a = table.value(j, m);
                if !a.is_zero() {
                    s = s + a * inv.coeff(l - j).clone();
                }
            }
            out.set(l, m, s);
        }
    }
    let log_der = an.q_derivative().try_mul(&inv)?.scale(&c.kappa);
    let e = QSeries::constant(c.e0(), order).try_add(&log_der)?;
    Ok((out, EigenSeries::new(e)))
}

/// Second-order rational approximant
/// `E^{(0)} + kappa (a1 q + 2 a2 q^2) / (1 + a1 q)` built from `alpha(n)`,
/// evaluated at a numeric `q`.
pub fn pade2<S: Scalar>(table: &CoeffTable<S>, q: C64) -> C64 {
    let n = table.n();
    let a = |l: usize| {
        if l <= table.order() {
            table.value(l, n).to_c64()
        } else {
            C64::new(0.0, 0.0)
        }
    };
    let k = table.couplings().kappa.to_c64();
    let e0 = table.couplings().e0().to_c64();
    e0 + k * (a(1) * q + 2.0 * a(2) * q * q) / (1.0 + a(1) * q)
}

/// `E^{(0)} + sum kappa l a_l q^l / (1 + sum a_l q^l)` with `a_l = alpha^{(l)}(n)`,
/// evaluated at a numeric `q`.
pub fn all_orders_eigen<S: Scalar>(
    diag: &QSeries<S>,
    kappa: &S,
    e0: &S,
    q: C64,
) -> C64 {
    let mut num = C64::new(0.0, 0.0);
    let mut den = C64::new(1.0, 0.0);
    let mut ql = C64::new(1.0, 0.0);
    for l in 1..=diag.order() {
        ql *= q;
        let a = diag.coeff(l).to_c64();
        num += a * ql * l as f64;
        den += a * ql;
    }
    e0.to_c64() + kappa.to_c64() * num / den
}

/// The same formula read coefficient-wise: `E^{(0)} + kappa (q d/dq D) / D`
/// with `D = 1 + sum_l a_l q^l`.
pub fn all_orders_eigen_series<S: Scalar>(
    diag: &QSeries<S>,
    kappa: &S,
    e0: &S,
) -> Result<EigenSeries<S>> {
    let mut d = diag.clone();
    d.set(0, S::unit());
    let ld = d.q_derivative().try_mul(&d.try_inv()?)?.scale(kappa);
    Ok(EigenSeries::new(QSeries::constant(e0.clone(), diag.order()).try_add(&ld)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{alg1, alg2};
    use crate::params::Params;
    use crate::seriescore::Rational;

    fn r(p: i64, q: i64) -> Rational {
        Rational::from_ratio(p, q)
    }

    #[test]
    fn bridge_matches_alg1() {
        let p = Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(2, 9));
        for n in [-1, 0, 2] {
            let (t1, e1) = alg1(n, &p, 4).unwrap();
            let t2 = alg2(n, &p, 4).unwrap();
            let (tb, eb) = bridge(&t2).unwrap();
            assert_eq!(e1, eb);
            assert_eq!(t1, tb);
            assert_eq!(tb.series_at(n), QSeries::unit(4));
        }
    }

    #[test]
    fn pade_agrees_to_second_order() {
        let p = Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(2, 9));
        let (_, e1) = alg1(1, &p, 3).unwrap();
        let t2 = alg2(1, &p, 3).unwrap();
        let mut prev = f64::INFINITY;
        for q in [0.02, 0.01, 0.005] {
            let q = C64::new(q, 0.0);
            let d = (pade2(&t2, q) - e1.series.eval(q)).norm();
            assert!(d < prev);
            prev = d;
        }
        assert!(prev < 1e-5);
    }

    #[test]
    fn rejects_wrong_tag() {
        let p = Params::new([r(1, 3), r(5, 7), r(-2, 5), r(3, 4)], r(2, 9));
        let (t1, _) = alg1(1, &p, 2).unwrap();
        assert!(bridge(&t1).is_err());
    }
}
