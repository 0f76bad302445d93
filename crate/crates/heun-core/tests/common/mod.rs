//! Shared strategies for the property tests.
#![allow(dead_code)]

use heun_core::seriescore::{QSeries, Rational, Scalar, C64};
use heun_core::Params;
use proptest::prelude::*;

pub fn r(p: i64, q: i64) -> Rational {
    Rational::from_ratio(p, q)
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 2i64..=9).prop_map(|(p, q)| r(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| *x != r(0, 1))
}

pub fn params_with(kappa: impl Strategy<Value = Rational>) -> impl Strategy<Value = Params<Rational>> {
    ([rational(), rational(), rational(), rational()], kappa)
        .prop_map(|(g, k)| Params::new(g, k))
        .prop_filter("-lambda in N0", |p| !p.neg_lambda_natural())
}

pub fn params() -> impl Strategy<Value = Params<Rational>> {
    params_with(nonzero_rational())
}

pub fn stationary() -> impl Strategy<Value = Params<Rational>> {
    params_with(Just(r(0, 1)))
}

pub fn rseries(order: usize) -> impl Strategy<Value = QSeries<Rational>> {
    prop::collection::vec(rational(), order + 1).prop_map(move |c| QSeries::from_coeffs(c, order))
}

/// Series with constant term one.
pub fn unit_rseries(order: usize) -> impl Strategy<Value = QSeries<Rational>> {
    rseries(order).prop_map(|mut s| {
        s.set(0, r(1, 1));
        s
    })
}

pub fn unit_cseries(order: usize) -> impl Strategy<Value = QSeries<C64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order).prop_map(move |v| {
        let mut c = vec![C64::new(1.0, 0.0)];
        c.extend(v.into_iter().map(|(a, b)| C64::new(a, b)));
        QSeries::from_coeffs(c, order)
    })
}

/// Exact equality in rational mode.
pub fn same<S: Scalar>(a: &[S], b: &[S]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}
